"""Spin-j angular momentum operators and collective moments.

Operators act on the (2j+1)-dimensional irrep in the Dicke basis, ordered
m = j, j-1, ..., -j (basis index 0 holds m = j). Spins are passed around as
the integer 2j so half-integer values stay exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from .errors import ContractError, ShapeError
from .numlin import check_hermitian, frozen

if TYPE_CHECKING:
    from .states import SymmetricState

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (PAULI_X, PAULI_Y, PAULI_Z)
ID2 = np.eye(2, dtype=complex)

DENSITY_ATOL = 1e-10
NORM_ATOL = 1e-10


@dataclass(frozen=True)
class SpinOperators:
    """The three components J1, J2, J3 for a single spin."""

    two_j: int
    j1: np.ndarray
    j2: np.ndarray
    j3: np.ndarray

    def __post_init__(self):
        for name in ("j1", "j2", "j3"):
            object.__setattr__(self, name, frozen(getattr(self, name)))

    @property
    def j(self) -> float:
        return self.two_j / 2

    @property
    def dim(self) -> int:
        return self.two_j + 1

    @property
    def components(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return (self.j1, self.j2, self.j3)


def make_spin_ops(two_j: int) -> SpinOperators:
    """Ladder-operator construction of J1, J2, J3 for spin j = two_j / 2."""
    two_j = int(two_j)
    if two_j < 0:
        raise ContractError("two_j must be non-negative")
    j = two_j / 2
    d = two_j + 1
    m = j - np.arange(d)
    jplus = np.zeros((d, d), dtype=complex)
    for k in range(1, d):
        mk = j - k  # J+ raises |j, m> to |j, m+1>, i.e. index k to k-1
        jplus[k - 1, k] = np.sqrt(j * (j + 1) - mk * (mk + 1))
    jminus = jplus.conj().T
    return SpinOperators(
        two_j=two_j,
        j1=(jplus + jminus) / 2,
        j2=(jplus - jminus) / 2j,
        j3=np.diag(m).astype(complex),
    )


def check_density_matrix(rho, dim: int | None = None, atol: float = DENSITY_ATOL) -> np.ndarray:
    """Validate a density matrix: Hermitian, unit trace, positive within atol."""
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {rho.shape}")
    if dim is not None and rho.shape[0] != dim:
        raise ShapeError(f"expected dimension {dim}, got {rho.shape[0]}")
    check_hermitian(rho, atol=atol, what="density matrix")
    tr = complex(np.trace(rho))
    if abs(tr - 1.0) > atol:
        raise ContractError(f"density matrix trace {tr:.12g} is not 1")
    lo = float(np.linalg.eigvalsh(rho)[0])
    if lo < -atol:
        raise ContractError(f"density matrix has negative eigenvalue {lo:.3e}")
    return rho


def variance_sum(ops: SpinOperators, rho) -> float:
    """Total variance of the three spin components in the state rho.

    For any valid spin-j state this is bounded below by j.
    """
    rho = check_density_matrix(rho, dim=ops.dim)
    total = 0.0
    for op in ops.components:
        mean = np.trace(rho @ op).real
        mean_sq = np.trace(rho @ op @ op).real
        total += mean_sq - mean**2
    return float(total)


def collective_moments(psi: "SymmetricState") -> tuple[np.ndarray, np.ndarray]:
    """First and symmetrized second moments of the collective spin.

    Parameters
    ----------
    psi : SymmetricState
        Normalized N-qubit symmetric state in the Dicke basis.

    Returns
    -------
    m1 : ndarray, shape (3,)
        <J_alpha> for alpha = 1, 2, 3.
    m2 : ndarray, shape (3, 3)
        <(J_alpha J_beta + J_beta J_alpha) / 2>, a real symmetric matrix
        whose trace is j(j+1) with j = N/2.
    """
    amps = np.asarray(psi.amplitudes, dtype=complex)
    norm = float(np.linalg.norm(amps))
    if abs(norm - 1.0) > NORM_ATOL:
        raise ContractError(f"state norm {norm:.12g} is not 1")
    ops = make_spin_ops(psi.n_qubits).components
    m1 = np.zeros(3)
    m2 = np.zeros((3, 3))
    applied = [op @ amps for op in ops]
    for a in range(3):
        m1[a] = np.vdot(amps, applied[a]).real
        for b in range(a, 3):
            m2[a, b] = m2[b, a] = np.vdot(applied[a], applied[b]).real
    return m1, m2
