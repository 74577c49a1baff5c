"""Bloch parameters (s, T) and the covariance matrix of two-qubit marginals.

A swap-symmetric two-qubit state supported on the symmetric sector is fixed
by the pair orientation vector s_alpha = <sigma_alpha x I> and the symmetric
correlation matrix t_ab = <sigma_a x sigma_b> with unit trace. The covariance
matrix C = T - s s^T drives the entanglement tests: its least eigenvalue is
negative exactly when the marginal is entangled.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from . import numlin
from .errors import ContractError, DomainError
from .numlin import frozen
from .spin import ID2, PAULIS, collective_moments

if TYPE_CHECKING:
    from .states import SymmetricState

TRACE_T_ATOL = 1e-10
SWAP_ATOL = 1e-10

# two-qubit swap, basis |00>, |01>, |10>, |11>
SWAP = np.array(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
)


@dataclass(frozen=True)
class BlochPair:
    """Pair orientation vector s and correlation matrix t of a symmetric marginal."""

    s: np.ndarray
    t: np.ndarray

    def __post_init__(self):
        s = np.asarray(self.s, dtype=float).reshape(-1)
        t = np.asarray(self.t, dtype=float)
        if s.shape != (3,) or t.shape != (3, 3):
            raise ContractError("BlochPair needs a 3-vector s and a 3x3 matrix t")
        if np.max(np.abs(t - t.T)) > TRACE_T_ATOL:
            raise ContractError("correlation matrix is not symmetric")
        if abs(np.trace(t) - 1.0) > TRACE_T_ATOL:
            raise ContractError(
                f"correlation matrix trace {np.trace(t):.12g} is not 1; "
                "the state does not live in the two-qubit symmetric sector"
            )
        if s @ s > 1.0 + TRACE_T_ATOL:
            raise ContractError(f"orientation vector has |s|^2 = {s @ s:.12g} > 1")
        object.__setattr__(self, "s", frozen(s))
        object.__setattr__(self, "t", frozen(t))

    @property
    def s_squared(self) -> float:
        return float(self.s @ self.s)


@dataclass(frozen=True)
class CovarianceReport:
    """C = T - s s^T with its spectrum; c_least drives the entanglement verdict."""

    c: np.ndarray
    eigenvalues: np.ndarray
    c_least: float
    axis_least: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "c", frozen(self.c))
        object.__setattr__(self, "eigenvalues", frozen(self.eigenvalues))
        object.__setattr__(self, "axis_least", frozen(self.axis_least))
        residual = float(np.max(np.abs(self.c @ self.axis_least - self.c_least * self.axis_least)))
        if residual > 1e-10:
            raise ContractError(f"least-eigenpair residual {residual:.3e} too large")


def bloch_from_two_qubit(rho) -> BlochPair:
    """Extract (s, T) from a swap-symmetric two-qubit density matrix.

    Inputs that commute with the swap but are not supported on the symmetric
    sector (e.g. the maximally mixed state) are rejected: their correlation
    trace differs from 1.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ContractError(f"expected a 4x4 density matrix, got {rho.shape}")
    defect = max(
        float(np.max(np.abs(SWAP @ rho - rho))),
        float(np.max(np.abs(rho @ SWAP - rho))),
    )
    if defect > SWAP_ATOL:
        raise ContractError(
            f"state is not swap-symmetric-sector supported (defect {defect:.3e})"
        )
    s = np.array([np.trace(rho @ np.kron(p, ID2)).real for p in PAULIS])
    t = np.array(
        [
            [np.trace(rho @ np.kron(pa, pb)).real for pb in PAULIS]
            for pa in PAULIS
        ]
    )
    asym = float(np.max(np.abs(t - t.T)))
    if asym > TRACE_T_ATOL:
        raise ContractError(f"correlation matrix asymmetry {asym:.3e}")
    return BlochPair(s=s, t=(t + t.T) / 2)


def bloch_from_symmetric(psi: "SymmetricState") -> BlochPair:
    """Extract (s, T) of any qubit pair from an N-qubit Dicke-basis state.

    Uses the collective moments of the full register: with J_alpha the
    collective spin components, s = (2/N) <J> and
    t_ab = (4 m2_ab - N delta_ab) / (N (N-1))
    where m2 is the symmetrized second-moment matrix.
    """
    n = psi.n_qubits
    if n < 2:
        raise DomainError("need at least 2 qubits to form a pair marginal")
    m1, m2 = collective_moments(psi)
    s = 2 * m1 / n
    t = (4 * m2 - n * np.eye(3)) / (n * (n - 1))
    return BlochPair(s=s, t=t)


def covariance(bp: BlochPair) -> CovarianceReport:
    """Covariance matrix C = T - s s^T with ascending eigensystem."""
    c = bp.t - np.outer(bp.s, bp.s)
    es = numlin.eig_hermitian(c)
    axis = np.real(es.eigenvectors[:, 0])
    axis = axis / np.linalg.norm(axis)
    report = CovarianceReport(
        c=c,
        eigenvalues=np.real(es.eigenvalues),
        c_least=float(es.eigenvalues[0]),
        axis_least=axis,
    )
    trace_identity = abs(float(np.trace(c)) - (1.0 - bp.s_squared))
    if trace_identity > 1e-10:
        raise ContractError(f"Tr C != 1 - |s|^2 by {trace_identity:.3e}")
    return report


def two_qubit_from_bloch(bp: BlochPair) -> np.ndarray:
    """Reconstruct the 4x4 marginal from its Bloch parameters."""
    rho = np.eye(4, dtype=complex)
    for a in range(3):
        pa = PAULIS[a]
        rho += bp.s[a] * (np.kron(pa, ID2) + np.kron(ID2, pa))
        for b in range(3):
            rho += bp.t[a, b] * np.kron(pa, PAULIS[b])
    return rho / 4
