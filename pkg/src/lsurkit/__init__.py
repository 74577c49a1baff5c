"""Pairwise-entanglement detection in permutation-symmetric multiqubit states.

The package tests violation of the variance-based local sum uncertainty
relation (LSUR) for collective angular momentum operators. The fast path
works entirely in the (N+1)-dimensional Dicke sector through the two-qubit
Bloch parameters (s, T) and the covariance matrix C = T - s s^T; a
brute-force module reproduces every quantity in the full 2^N register space
for cross-validation.
"""

from .errors import (
    ContractError,
    DomainError,
    LsurkitError,
    ResourceError,
    ShapeError,
)
from .lsur import (
    AxisAngle,
    LsurVerdict,
    chi_brute,
    chi_functional,
    lsur_verdict,
    rotation_matrix,
    su2_unitary,
    werner_lsur_scan,
)
from .numlin import (
    EigenSystem,
    eig_hermitian,
    expm_hermitian,
    kron,
    partial_trace,
    partial_transpose,
)
from .oracle import TensorState, embed_dicke, lsur_lhs_brute, partition_ops
from .spin import SpinOperators, collective_moments, make_spin_ops, variance_sum
from .states import (
    SymmetricState,
    WClassCoeffs,
    ku_bloch_analytic,
    ku_state,
    singlet,
    wclass_covariance,
    wclass_state,
    wclass_two_qubit,
    werner,
)
from .tomo import (
    BlochPair,
    CovarianceReport,
    bloch_from_symmetric,
    bloch_from_two_qubit,
    covariance,
    two_qubit_from_bloch,
)

__version__ = "0.1.0"

__all__ = [
    "AxisAngle",
    "BlochPair",
    "ContractError",
    "CovarianceReport",
    "DomainError",
    "EigenSystem",
    "LsurVerdict",
    "LsurkitError",
    "ResourceError",
    "ShapeError",
    "SpinOperators",
    "SymmetricState",
    "TensorState",
    "WClassCoeffs",
    "bloch_from_symmetric",
    "bloch_from_two_qubit",
    "chi_brute",
    "chi_functional",
    "collective_moments",
    "covariance",
    "eig_hermitian",
    "embed_dicke",
    "expm_hermitian",
    "kron",
    "ku_bloch_analytic",
    "ku_state",
    "lsur_lhs_brute",
    "lsur_verdict",
    "make_spin_ops",
    "partial_trace",
    "partial_transpose",
    "partition_ops",
    "rotation_matrix",
    "singlet",
    "su2_unitary",
    "two_qubit_from_bloch",
    "variance_sum",
    "wclass_covariance",
    "wclass_state",
    "wclass_two_qubit",
    "werner",
    "werner_lsur_scan",
]
