"""Dense linear algebra for small complex Hilbert spaces.

Matrices are plain row-major numpy arrays. Eigenproblems are restricted to
Hermitian operators and solved with LAPACK's Hermitian drivers; every entry
point checks its preconditions and raises instead of silently proceeding on
ill-formed input.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ContractError, ResourceError, ShapeError

HERMITICITY_ATOL = 1e-12
TRACE_ATOL = 1e-10

# Kronecker products refuse to build results with more entries per axis than
# this; the largest routine use is the 2^10-dimensional brute-force space.
KRON_DIM_CAP = 2**20


def as_matrix(m) -> np.ndarray:
    """Coerce to a 2-d square array, preserving real/complex dtype."""
    arr = np.asarray(m)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {arr.shape}")
    return arr


def hermiticity_defect(m: np.ndarray) -> float:
    """Largest entrywise deviation of m from its conjugate transpose."""
    m = as_matrix(m)
    return float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0


def check_hermitian(m: np.ndarray, atol: float = HERMITICITY_ATOL, what: str = "matrix") -> np.ndarray:
    m = as_matrix(m)
    defect = hermiticity_defect(m)
    if defect > atol:
        raise ContractError(f"{what} is not Hermitian: defect {defect:.3e} > {atol:.1e}")
    return m


def frozen(arr: np.ndarray) -> np.ndarray:
    """Read-only copy, used to keep dataclass payloads immutable."""
    out = np.array(arr)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class EigenSystem:
    """Hermitian eigendecomposition, eigenvalues ascending.

    ``eigenvectors[:, i]`` is the orthonormal eigenvector belonging to
    ``eigenvalues[i]``.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "eigenvalues", frozen(self.eigenvalues))
        object.__setattr__(self, "eigenvectors", frozen(self.eigenvectors))


def kron(a, b) -> np.ndarray:
    """Kronecker product with a size cap on the result.

    Raises
    ------
    ResourceError
        If either axis of the product would exceed ``KRON_DIM_CAP`` entries.
    """
    a = np.asarray(a)
    b = np.asarray(b)
    if a.ndim != 2 or b.ndim != 2:
        raise ShapeError("kron expects two matrices")
    if a.shape[0] * b.shape[0] > KRON_DIM_CAP or a.shape[1] * b.shape[1] > KRON_DIM_CAP:
        raise ResourceError(
            f"kron result {a.shape[0] * b.shape[0]}x{a.shape[1] * b.shape[1]} "
            f"exceeds the {KRON_DIM_CAP}-entry axis cap"
        )
    return np.kron(a, b)


def partial_trace(rho, dims, keep) -> np.ndarray:
    """Reduced matrix of a unit-trace operator over the kept subsystems.

    Parameters
    ----------
    rho : array_like
        Square matrix on the tensor product of the subsystems, unit trace.
    dims : sequence of int
        Dimension of each subsystem; their product must equal the size of rho.
    keep : iterable of int
        Indices (into dims) of the subsystems to keep, in any order; the
        result is ordered by ascending subsystem index.
    """
    rho = as_matrix(np.asarray(rho, dtype=complex))
    dims = [int(d) for d in dims]
    if any(d < 1 for d in dims):
        raise ShapeError("subsystem dimensions must be positive")
    total = int(np.prod(dims))
    if rho.shape != (total, total):
        raise ShapeError(f"rho is {rho.shape} but dims {dims} give {total}x{total}")
    tr = complex(np.trace(rho))
    if abs(tr - 1.0) > TRACE_ATOL:
        raise ContractError(f"partial_trace expects unit trace, got {tr:.12g}")
    keep = sorted({int(k) for k in keep})
    if not keep or any(k < 0 or k >= len(dims) for k in keep):
        raise ShapeError(f"keep indices {keep} out of range for {len(dims)} subsystems")

    n = len(dims)
    tensor = rho.reshape(dims + dims)
    row_labels = list(range(n))
    # traced subsystems share a label between row and column index
    col_labels = [n + i if i in keep else i for i in range(n)]
    out_labels = keep + [n + i for i in keep]
    reduced = np.einsum(tensor, row_labels + col_labels, out_labels)
    d_keep = int(np.prod([dims[k] for k in keep]))
    return reduced.reshape(d_keep, d_keep)


def partial_transpose(rho, subsystem: int = 1) -> np.ndarray:
    """Transpose one qubit of a two-qubit Hermitian unit-trace matrix."""
    rho = as_matrix(np.asarray(rho, dtype=complex))
    if rho.shape != (4, 4):
        raise ShapeError(f"partial_transpose expects a 4x4 matrix, got {rho.shape}")
    check_hermitian(rho, what="partial_transpose input")
    if abs(complex(np.trace(rho)) - 1.0) > TRACE_ATOL:
        raise ContractError("partial_transpose expects unit trace")
    if subsystem not in (0, 1):
        raise ShapeError("subsystem must be 0 or 1")
    t = rho.reshape(2, 2, 2, 2)
    if subsystem == 0:
        t = t.transpose(2, 1, 0, 3)
    else:
        t = t.transpose(0, 3, 2, 1)
    return t.reshape(4, 4)


def eig_hermitian(m) -> EigenSystem:
    """Eigendecomposition of a Hermitian (or real symmetric) matrix."""
    m = check_hermitian(np.asarray(m), what="eig_hermitian input")
    w, v = np.linalg.eigh(m)
    return EigenSystem(eigenvalues=w, eigenvectors=v)


def expm_hermitian(h, t: float) -> np.ndarray:
    """Unitary exp(-i*h*t) generated by a Hermitian h, via eigendecomposition."""
    h = check_hermitian(np.asarray(h), what="expm_hermitian generator")
    w, v = np.linalg.eigh(h)
    phases = np.exp(-1j * w * float(t))
    return (v * phases) @ v.conj().T
