"""Seeded random generators for states, marginals and rotations.

Used by the property tests and the command-line oracle mode; everything
takes an explicit numpy Generator so runs are reproducible.
"""

from __future__ import annotations

import numpy as np

from .lsur import AxisAngle
from .states import SymmetricState

# triplet basis |00>, (|01> + |10>)/sqrt(2), |11> as columns
_TRIPLET = np.array(
    [
        [1, 0, 0],
        [0, 1 / np.sqrt(2), 0],
        [0, 1 / np.sqrt(2), 0],
        [0, 0, 1],
    ],
    dtype=complex,
)


def random_density_matrix(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Full-rank density matrix from the Hilbert-Schmidt construction G G^dag / Tr."""
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_pure_state(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Normalized complex Gaussian vector."""
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return v / np.linalg.norm(v)


def random_symmetric_state(n_qubits: int, rng: np.random.Generator) -> SymmetricState:
    """Random pure state in the (N+1)-dimensional Dicke sector."""
    return SymmetricState(n_qubits=n_qubits, amplitudes=random_pure_state(n_qubits + 1, rng))


def random_axis_angle(rng: np.random.Generator) -> AxisAngle:
    """Uniform rotation axis with an angle uniform on [0, 2*pi]."""
    axis = rng.normal(size=3)
    axis /= np.linalg.norm(axis)
    return AxisAngle(axis=axis, theta=float(rng.uniform(0, 2 * np.pi)))


def random_triplet_marginal(rng: np.random.Generator) -> np.ndarray:
    """Random two-qubit state supported exactly on the symmetric sector."""
    r3 = random_density_matrix(3, rng)
    return _TRIPLET @ r3 @ _TRIPLET.conj().T


def random_product_marginal(rng: np.random.Generator, components: int = 1) -> np.ndarray:
    """Pair marginal of a mixture of identical-qubit product states.

    Each component contributes |phi phi><phi phi| for a random single-qubit
    phi; such mixtures are separable and symmetric, so they must never
    violate the LSUR.
    """
    weights = rng.dirichlet(np.ones(components)) if components > 1 else np.array([1.0])
    rho = np.zeros((4, 4), dtype=complex)
    for w in weights:
        phi = random_pure_state(2, rng)
        pair = np.kron(phi, phi)
        rho += w * np.outer(pair, pair.conj())
    return rho
