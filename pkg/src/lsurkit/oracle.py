"""Brute-force reference path in the full 2^N-dimensional register space.

Everything here is built the expensive, transparent way: Dicke states are
embedded as explicit symmetric superpositions, collective operators as sums
of single-qubit Pauli chains. The analytic modules are validated against
these implementations; nothing here takes shortcuts through them except the
shared axis-angle rotation.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from . import numlin
from .errors import ContractError, ResourceError
from .lsur import AxisAngle, rotation_matrix
from .numlin import frozen
from .spin import ID2, PAULIS
from .states import SymmetricState

QUBIT_CAP = 10
NORM_ATOL = 1e-12


@dataclass(frozen=True)
class TensorState:
    """Pure state as a full 2^N amplitude vector, capped at 10 qubits."""

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        n = int(self.n_qubits)
        if n < 1:
            raise ContractError("n_qubits must be positive")
        if n > QUBIT_CAP:
            raise ResourceError(f"{n} qubits exceeds the brute-force cap of {QUBIT_CAP}")
        amps = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if amps.shape != (2**n,):
            raise ContractError(f"expected 2^{n} amplitudes, got {amps.shape[0]}")
        norm_sq = float(np.vdot(amps, amps).real)
        if abs(norm_sq - 1.0) > NORM_ATOL:
            raise ContractError(f"squared norm {norm_sq:.15g} is not 1")
        object.__setattr__(self, "n_qubits", n)
        object.__setattr__(self, "amplitudes", frozen(amps))


def embed_dicke(psi: SymmetricState) -> TensorState:
    """Expand a Dicke-basis state over the computational basis.

    Level k maps to the uniform superposition of the C(N, k) basis states
    with exactly k excited qubits.
    """
    n = psi.n_qubits
    if n > QUBIT_CAP:
        raise ResourceError(f"{n} qubits exceeds the brute-force cap of {QUBIT_CAP}")
    weights = np.array([psi.amplitudes[k] / np.sqrt(comb(n, k)) for k in range(n + 1)])
    ones = np.array([bin(idx).count("1") for idx in range(2**n)])
    return TensorState(n_qubits=n, amplitudes=weights[ones])


def sigma_chain(alpha: int, position: int, n_qubits: int) -> np.ndarray:
    """Pauli sigma_alpha acting on one qubit of an n-qubit register."""
    out = np.eye(1, dtype=complex)
    for k in range(n_qubits):
        out = numlin.kron(out, PAULIS[alpha] if k == position else ID2)
    return out


def collective_spin(alpha: int, n_qubits: int) -> np.ndarray:
    """Collective spin component (1/2) sum_k sigma_k,alpha on n qubits."""
    total = np.zeros((2**n_qubits, 2**n_qubits), dtype=complex)
    for k in range(n_qubits):
        total += sigma_chain(alpha, k, n_qubits)
    return total / 2


def partition_ops(
    n_qubits: int, aa: AxisAngle | None = None
) -> tuple[list[np.ndarray], list[np.ndarray]]:
    """Collective spin components of the two halves of an even register.

    Returns (J_A, J_B') where J_A acts on the first N/2 qubits and J_B' on
    the last N/2, rotated by aa when given.
    """
    n_qubits = int(n_qubits)
    if n_qubits < 2 or n_qubits % 2:
        raise ContractError(f"need an even qubit count >= 2, got {n_qubits}")
    if n_qubits > QUBIT_CAP:
        raise ResourceError(f"{n_qubits} qubits exceeds the brute-force cap of {QUBIT_CAP}")
    half = n_qubits // 2
    eye_half = np.eye(2**half, dtype=complex)
    j_half = [collective_spin(alpha, half) for alpha in range(3)]
    j_a = [numlin.kron(j, eye_half) for j in j_half]
    j_b = [numlin.kron(eye_half, j) for j in j_half]
    if aa is None:
        return j_a, j_b
    r = rotation_matrix(aa)
    j_b_rot = [sum(r[alpha, beta] * j_b[beta] for beta in range(3)) for alpha in range(3)]
    return j_a, j_b_rot


def lsur_lhs_brute(psi: TensorState, aa: AxisAngle | None = None) -> float:
    """Variance sum over the three components J_A,alpha + J'_B,alpha."""
    j_a, j_b = partition_ops(psi.n_qubits, aa)
    amps = psi.amplitudes
    lhs = 0.0
    for alpha in range(3):
        op = j_a[alpha] + j_b[alpha]
        applied = op @ amps
        mean = np.vdot(amps, applied).real
        mean_sq = np.vdot(applied, applied).real
        lhs += mean_sq - mean**2
    return float(lhs)


def permutation_symmetry_defect(psi: TensorState) -> float:
    """Largest amplitude change under any adjacent qubit swap."""
    n = psi.n_qubits
    tensor = psi.amplitudes.reshape((2,) * n)
    worst = 0.0
    for k in range(n - 1):
        swapped = np.swapaxes(tensor, k, k + 1)
        worst = max(worst, float(np.max(np.abs(swapped - tensor))))
    return worst
