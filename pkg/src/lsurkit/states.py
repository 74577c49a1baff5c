"""State families used to exercise the uncertainty-relation machinery.

Covers spin singlets, the two-qubit Werner line, the one-parameter W class
and the one-axis-twisting (Kitagawa-Ueda) family. Pure multiqubit states are
stored in the Dicke basis: index k of a SymmetricState holds the amplitude
of the symmetric level with k excitations, i.e. |j = N/2, m = N/2 - k>.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass

import numpy as np

from . import numlin
from .errors import ContractError, DomainError
from .numlin import frozen
from .spin import make_spin_ops
from .tomo import BlochPair

STATE_NORM_ATOL = 1e-12


@dataclass(frozen=True)
class SymmetricState:
    """N-qubit permutation-symmetric pure state in the Dicke basis."""

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        n = int(self.n_qubits)
        if n < 1:
            raise DomainError("n_qubits must be positive")
        amps = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if amps.shape != (n + 1,):
            raise ContractError(
                f"expected {n + 1} Dicke amplitudes for {n} qubits, got {amps.shape[0]}"
            )
        norm_sq = float(np.vdot(amps, amps).real)
        if abs(norm_sq - 1.0) > STATE_NORM_ATOL:
            raise ContractError(f"amplitudes have squared norm {norm_sq:.15g}, expected 1")
        object.__setattr__(self, "n_qubits", n)
        object.__setattr__(self, "amplitudes", frozen(amps))

    def to_json(self) -> str:
        """Serialize to the JSON schema consumed by the command-line tool."""
        return json.dumps(
            {
                "n_qubits": self.n_qubits,
                "dicke_amplitudes": [[a.real, a.imag] for a in self.amplitudes],
            }
        )

    @classmethod
    def from_json_obj(cls, obj) -> "SymmetricState":
        """Build from a decoded JSON object, validating the schema."""
        if not isinstance(obj, dict):
            raise ContractError("state document must be a JSON object")
        if "n_qubits" not in obj or "dicke_amplitudes" not in obj:
            raise ContractError("state document needs 'n_qubits' and 'dicke_amplitudes'")
        n = obj["n_qubits"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ContractError("'n_qubits' must be a positive integer")
        raw = obj["dicke_amplitudes"]
        if not isinstance(raw, list) or len(raw) != n + 1:
            raise ContractError(f"'dicke_amplitudes' must be a list of length {n + 1}")
        amps = np.zeros(n + 1, dtype=complex)
        for k, pair in enumerate(raw):
            if (
                not isinstance(pair, list)
                or len(pair) != 2
                or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in pair)
            ):
                raise ContractError(f"amplitude {k} must be a [re, im] pair of numbers")
            amps[k] = complex(pair[0], pair[1])
        return cls(n_qubits=n, amplitudes=amps)


@dataclass(frozen=True)
class WClassCoeffs:
    """Entries of the W-class two-qubit marginal: diagonal head A, coherence B,
    one-excitation block D. The marginal is normalized by A + 2D."""

    A: float
    B: float
    D: float

    def __post_init__(self):
        if self.A < 0 or self.D < 0 or self.A + 2 * self.D <= 0:
            raise ContractError("require A, D >= 0 and A + 2D > 0")

    @property
    def normalizer(self) -> float:
        return self.A + 2 * self.D


def singlet(two_j: int) -> np.ndarray:
    """Spin singlet of two spin-j systems, as a (2j+1)^2 state vector.

    The total angular momentum J_A + J_B annihilates this state, so its
    three-component variance sum vanishes.
    """
    two_j = int(two_j)
    if two_j < 1:
        raise DomainError("two_j must be at least 1")
    d = two_j + 1
    psi = np.zeros(d * d, dtype=complex)
    for k in range(d):
        # pair level m with -m; the Dicke index of -m is two_j - k
        psi[k * d + (two_j - k)] = (-1) ** k
    return psi / np.sqrt(d)


def werner(x: float) -> np.ndarray:
    """Two-qubit Werner state: (1-x)/4 * I + x * singlet projector."""
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"Werner parameter {x} outside [0, 1]")
    psi = singlet(1)
    return (1 - x) / 4 * np.eye(4, dtype=complex) + x * np.outer(psi, psi.conj())


def _check_wclass_params(n_qubits: int, a: float) -> tuple[int, float]:
    n_qubits = int(n_qubits)
    if n_qubits < 2:
        raise DomainError("the W class needs at least 2 qubits")
    a = float(a)
    if not 0.0 <= a <= 1.0:
        raise DomainError(f"W-class parameter {a} outside [0, 1]")
    if a in (0.0, 1.0):
        warnings.warn(
            f"W-class parameter a = {a:g} is a boundary value (pure W or product limit)",
            stacklevel=3,
        )
    return n_qubits, a


def wclass_state(n_qubits: int, a: float) -> SymmetricState:
    """Superposition of the all-zero product state (weight a) and the W state."""
    n_qubits, a = _check_wclass_params(n_qubits, a)
    amps = np.zeros(n_qubits + 1, dtype=complex)
    amps[0] = a
    amps[1] = np.sqrt(1 - a * a)
    return SymmetricState(n_qubits=n_qubits, amplitudes=amps)


def wclass_coeffs(n_qubits: int, a: float) -> WClassCoeffs:
    """Closed-form entries of the W-class two-qubit marginal."""
    n_qubits, a = _check_wclass_params(n_qubits, a)
    n = n_qubits
    one = 1 - a * a
    return WClassCoeffs(
        A=(n * a * a + (n - 2) * one) / n,
        B=a * np.sqrt(one) / np.sqrt(n),
        D=one / n,
    )


def wclass_two_qubit(n_qubits: int, a: float) -> np.ndarray:
    """Reduced two-qubit density matrix of the W-class state.

    Basis order |00>, |01>, |10>, |11>; the |11> row and column vanish
    because the family carries at most one excitation.
    """
    c = wclass_coeffs(n_qubits, a)
    rho = np.array(
        [
            [c.A, c.B, c.B, 0],
            [c.B, c.D, c.D, 0],
            [c.B, c.D, c.D, 0],
            [0, 0, 0, 0],
        ],
        dtype=complex,
    )
    return rho / c.normalizer


def wclass_covariance(n_qubits: int, a: float) -> np.ndarray:
    """Closed-form covariance matrix T - s s^T of the W-class marginal."""
    c = wclass_coeffs(n_qubits, a)
    A, B, D = c.A, c.B, c.D
    cov = np.array(
        [
            [2 * D - 4 * B * B, 0, 2 * B * (1 - A)],
            [0, 2 * D, 0],
            [2 * B * (1 - A), 0, A - 2 * D - A * A],
        ]
    )
    return cov / c.normalizer


def ku_state(n_qubits: int, chi_t: float) -> SymmetricState:
    """One-axis-twisting evolution exp(-i * chi_t * J1^2) of the spin-down state."""
    n_qubits = int(n_qubits)
    if n_qubits < 2 or n_qubits % 2:
        raise DomainError(f"one-axis twisting is set up for even N >= 2, got {n_qubits}")
    ops = make_spin_ops(n_qubits)
    u = numlin.expm_hermitian(ops.j1 @ ops.j1, float(chi_t))
    return SymmetricState(n_qubits=n_qubits, amplitudes=u[:, -1])


def ku_bloch_analytic(n_qubits: int, chi_t: float) -> BlochPair:
    """Closed-form pair orientation and correlation matrix of the twisted state."""
    n_qubits = int(n_qubits)
    if n_qubits < 2 or n_qubits % 2:
        raise DomainError(f"one-axis twisting is set up for even N >= 2, got {n_qubits}")
    chi_t = float(chi_t)
    c = np.cos(chi_t)
    s = np.array([0.0, 0.0, -(c ** (n_qubits - 1))])
    t12 = c ** (n_qubits - 2) * np.sin(chi_t)
    t22 = 0.5 * (1 - np.cos(2 * chi_t) ** (n_qubits - 2))
    t = np.array(
        [
            [0.0, t12, 0.0],
            [t12, t22, 0.0],
            [0.0, 0.0, 1 - t22],
        ]
    )
    return BlochPair(s=s, t=t)
