"""Violation tests for the local sum uncertainty relation (LSUR).

For an even number N = 2n of exchange-symmetric qubits, split into two
halves A and B, every separable state obeys

    sum_alpha [Delta(J_A,alpha + J'_B,alpha)]^2  >=  n

where J'_B is the B-side collective spin rotated by an arbitrary axis-angle
rotation. The normalized excess chi(axis, theta) collapses to a closed form
in the pair Bloch parameters, is minimized by rotating by pi about the least
eigenvector of the covariance matrix, and is negative there exactly when the
least covariance eigenvalue c_L is; the LSUR left-hand side at that optimum
is n (1 + n c_L).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import numlin, states, tomo
from .errors import ContractError, DomainError, LsurkitError
from .numlin import frozen
from .spin import ID2, PAULIS

AXIS_NORM_ATOL = 1e-12
VIOLATION_ATOL = 1e-10
PPT_ATOL = 1e-10


@dataclass(frozen=True)
class AxisAngle:
    """Rotation axis (unit 3-vector) and angle in radians."""

    axis: np.ndarray
    theta: float

    def __post_init__(self):
        axis = np.asarray(self.axis, dtype=float).reshape(-1)
        if axis.shape != (3,):
            raise ContractError("axis must be a 3-vector")
        norm = float(np.linalg.norm(axis))
        if abs(norm - 1.0) > AXIS_NORM_ATOL:
            raise ContractError(f"axis norm {norm:.15g} is not 1")
        object.__setattr__(self, "axis", frozen(axis))
        object.__setattr__(self, "theta", float(self.theta))


@dataclass(frozen=True)
class LsurVerdict:
    """Outcome of the LSUR test on a symmetric pair marginal.

    lhs is the optimized variance sum n (1 + n c_least) against the separable
    bound n; ppt_negative reports whether the reconstructed marginal has a
    negative partial transpose.
    """

    n: int
    c_least: float
    chi_value: float
    lhs: float
    bound: float
    violated: bool
    ppt_negative: bool


def rotation_matrix(aa: AxisAngle) -> np.ndarray:
    """Proper orthogonal rotation by theta about the given axis.

    R = cos(theta) I + (1 - cos(theta)) a a^T + sin(theta) [a]_x, the adjoint
    image of the spin rotation exp(-i (sigma . a) theta / 2): conjugating the
    Pauli vector gives U^dag sigma_alpha U = sum_beta R_alpha,beta sigma_beta.
    """
    ax, ay, az = aa.axis
    cos_t = np.cos(aa.theta)
    sin_t = np.sin(aa.theta)
    cross = np.array([[0, -az, ay], [az, 0, -ax], [-ay, ax, 0]])
    return cos_t * np.eye(3) + (1 - cos_t) * np.outer(aa.axis, aa.axis) + sin_t * cross


def su2_unitary(aa: AxisAngle) -> np.ndarray:
    """Qubit rotation exp(-i (sigma . a) theta / 2) matching rotation_matrix."""
    sig_a = sum(aa.axis[k] * PAULIS[k] for k in range(3))
    return np.cos(aa.theta / 2) * ID2 - 1j * np.sin(aa.theta / 2) * sig_a


def chi_functional(bp: tomo.BlochPair, aa: AxisAngle) -> float:
    """Normalized LSUR excess (1 - |s|^2 + Tr[R C]) / 2; negative means violation."""
    r = rotation_matrix(aa)
    c = bp.t - np.outer(bp.s, bp.s)
    return float(0.5 * (1.0 - bp.s_squared + np.trace(r @ c)))


def chi_brute(psi, aa: AxisAngle) -> float:
    """Normalized LSUR excess from an explicit full-register variance sum.

    psi may be a Dicke-basis SymmetricState (embedded on the fly) or an
    already-embedded TensorState; the qubit count must be even and within
    the brute-force cap.
    """
    from . import oracle

    if isinstance(psi, states.SymmetricState):
        psi = oracle.embed_dicke(psi)
    if psi.n_qubits % 2:
        raise DomainError(f"LSUR bipartition needs an even qubit count, got {psi.n_qubits}")
    n = psi.n_qubits // 2
    lhs = oracle.lsur_lhs_brute(psi, aa)
    return (lhs - n) / n**2


def lsur_verdict(bp: tomo.BlochPair, n: int) -> LsurVerdict:
    """Run the optimized LSUR test for a bipartition into two n-qubit halves.

    Cross-checks the closed form against the chi functional at the optimal
    rotation, and flags whether the reconstructed 4x4 marginal is entangled
    under partial transpose.
    """
    n = int(n)
    if n < 1:
        raise DomainError("n must be a positive integer")
    report = tomo.covariance(bp)
    c_least = report.c_least
    lhs = n * (1.0 + n * c_least)
    chi_opt = chi_functional(bp, AxisAngle(axis=report.axis_least, theta=np.pi))
    if abs(n * n * chi_opt + n - lhs) > 1e-10:
        raise LsurkitError(
            f"internal check failed: optimized chi {chi_opt:.15g} disagrees with "
            f"closed-form lhs {lhs:.15g}"
        )
    rho = tomo.two_qubit_from_bloch(bp)
    lowest = float(np.linalg.eigvalsh(rho)[0])
    if lowest < -1e-10:
        raise ContractError(
            f"Bloch pair does not reconstruct a physical marginal (eigenvalue {lowest:.3e})"
        )
    pt_least = float(np.linalg.eigvalsh(numlin.partial_transpose(rho))[0])
    return LsurVerdict(
        n=n,
        c_least=c_least,
        chi_value=chi_opt,
        lhs=lhs,
        bound=float(n),
        violated=bool(lhs < n - VIOLATION_ATOL),
        ppt_negative=bool(pt_least < -PPT_ATOL),
    )


def werner_lsur_scan(x_grid) -> list[tuple[float, float]]:
    """Direct two-qubit LSUR left-hand side along the Werner line.

    Evaluates sum_alpha [Delta(sigma_alpha x I + I x sigma_alpha)]^2 on each
    Werner state; separable states keep it at or above 4, and the closed form
    is 6 (1 - x).
    """
    pair_ops = [np.kron(p, ID2) + np.kron(ID2, p) for p in PAULIS]
    out = []
    for x in x_grid:
        rho = states.werner(x)
        lhs = 0.0
        for op in pair_ops:
            mean = np.trace(rho @ op).real
            mean_sq = np.trace(rho @ op @ op).real
            lhs += mean_sq - mean**2
        out.append((float(x), float(lhs)))
    return out
