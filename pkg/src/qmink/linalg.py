"""Dense complex-matrix foundation for small quantum states.

Validation of density matrices, Hermitian eigendecomposition, fractional
matrix powers, block access for an (n*m) x (n*m) matrix partitioned into
n^2 blocks of size m x m, the two partial traces realized by that
partition, blockwise partial transpose, trace norm, and zero-padding.

Matrices are dense numpy arrays; everything here targets dimensions of a
few dozen at most.  Functions accept either a raw array or a
:class:`DensityMatrix` and never mutate their input.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatchError,
    IndexOutOfRangeError,
    NegativeEigenvalueBeyondToleranceError,
    NoConvergenceError,
    NonPositiveExponentError,
    NotHermitianError,
    NotPositiveError,
    PartitionMismatchError,
    ShrinkNotAllowedError,
    TraceNotOneError,
)

#: Default validation tolerance, overridable per call.
DEFAULT_TOL = 1e-9

#: Eigenvalues in [-EIG_CLAMP, 0) are treated as exact zeros when taking
#: fractional powers; anything below -EIG_CLAMP is an error, never silently
#: clamped, so numerical PSD drift cannot produce complex powers unnoticed.
EIG_CLAMP = 1e-9


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A validated density matrix: Hermitian, unit trace, positive semidefinite.

    Construct via :func:`validate_density`; the wrapped array is read-only.
    """

    matrix: np.ndarray
    tol: float = DEFAULT_TOL

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigenvalues (real, ascending) and unitary eigenvector matrix (columns)."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


@dataclass(frozen=True)
class BlockPartition:
    """n blocks per side, each m x m, tiling an (n*m) x (n*m) matrix."""

    n: int
    m: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.m < 1:
            raise PartitionMismatchError(
                f"partition sides must be >= 1, got n={self.n}, m={self.m}"
            )

    @property
    def dim(self) -> int:
        return self.n * self.m

    def check(self, dim: int) -> None:
        if self.dim != dim:
            raise PartitionMismatchError(
                f"partition {self.n}x{self.m} blocks does not tile dimension {dim}"
            )


def as_matrix(m) -> np.ndarray:
    """Coerce a DensityMatrix or array-like to a square complex ndarray."""
    if isinstance(m, DensityMatrix):
        return m.matrix
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    return a


def hermiticity_defect(m) -> float:
    """max |m_jk - conj(m_kj)| over all entries."""
    a = as_matrix(m)
    return float(np.max(np.abs(a - a.conj().T))) if a.size else 0.0


def validate_density(m, tol: float = DEFAULT_TOL) -> DensityMatrix:
    """Validate Hermiticity, unit trace and positivity; return a DensityMatrix.

    Raises
    ------
    NotHermitianError, TraceNotOneError, NotPositiveError
        Naming the violated invariant together with the measured defect.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = as_matrix(m)
    defect = hermiticity_defect(a)
    if defect > tol:
        raise NotHermitianError(f"hermiticity defect {defect:.3e} exceeds tol {tol:.3e}")
    tr = complex(np.trace(a))
    if abs(tr - 1.0) > tol:
        raise TraceNotOneError(f"trace {tr!r} differs from 1 by {abs(tr - 1.0):.3e}")
    lo = float(np.linalg.eigvalsh((a + a.conj().T) / 2.0)[0])
    if lo < -tol:
        raise NotPositiveError(f"minimum eigenvalue {lo:.3e} below -tol {-tol:.3e}")
    frozen = np.array(a, dtype=complex)
    frozen.setflags(write=False)
    return DensityMatrix(matrix=frozen, tol=tol)


def eig_hermitian(m, tol: float = DEFAULT_TOL) -> Spectrum:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending.

    Satisfies ``V diag(lam) V^dag = A`` and ``V^dag V = I`` to about 1e-11
    relative accuracy (LAPACK backend via numpy).
    """
    a = as_matrix(m)
    defect = hermiticity_defect(a)
    if defect > tol:
        raise NotHermitianError(f"hermiticity defect {defect:.3e} exceeds tol {tol:.3e}")
    try:
        w, v = np.linalg.eigh((a + a.conj().T) / 2.0)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK rarely fails here
        raise NoConvergenceError(str(exc)) from exc
    return Spectrum(eigenvalues=w, eigenvectors=v)


def _clamped_eigenvalues(w: np.ndarray) -> np.ndarray:
    lo = float(w[0])
    if lo < -EIG_CLAMP:
        raise NegativeEigenvalueBeyondToleranceError(
            f"eigenvalue {lo:.3e} below -{EIG_CLAMP:.0e}; matrix is not PSD"
        )
    return np.maximum(w, 0.0)


def psd_eigenvalues(m, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Ascending eigenvalues with the [-1e-9, 0) band clamped to zero."""
    return _clamped_eigenvalues(eig_hermitian(m, tol=tol).eigenvalues)


def mat_power(m, alpha: float, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Fractional power of a positive-semidefinite Hermitian matrix.

    Returns ``V diag(lam^alpha) V^dag`` with eigenvalues in [-1e-9, 0)
    clamped to 0 first (0^alpha := 0 for alpha > 0).  The result is exactly
    Hermitian.
    """
    if not alpha > 0:
        raise NonPositiveExponentError(f"exponent must be > 0, got {alpha}")
    spec = eig_hermitian(m, tol=tol)
    w = _clamped_eigenvalues(spec.eigenvalues)
    powered = (spec.eigenvectors * w**alpha) @ spec.eigenvectors.conj().T
    return (powered + powered.conj().T) / 2.0


def _blocks_view(m, part: BlockPartition) -> np.ndarray:
    a = as_matrix(m)
    part.check(a.shape[0])
    return a.reshape(part.n, part.m, part.n, part.m)


def block(m, part: BlockPartition, i: int, j: int) -> np.ndarray:
    """The m x m block a_ij; indices are 1-based, matching the a_11 convention."""
    r = _blocks_view(m, part)
    if not (1 <= i <= part.n and 1 <= j <= part.n):
        raise IndexOutOfRangeError(
            f"block index ({i},{j}) outside 1..{part.n} x 1..{part.n}"
        )
    return np.array(r[i - 1, :, j - 1, :])


def partial_trace_first(m, part: BlockPartition) -> np.ndarray:
    """Sum of diagonal blocks, i.e. the first subsystem traced out."""
    r = _blocks_view(m, part)
    return np.einsum("ikil->kl", r)


def block_trace_matrix(m, part: BlockPartition) -> np.ndarray:
    """The n x n matrix of block traces B_ij = Tr a_ij (second subsystem traced out)."""
    r = _blocks_view(m, part)
    return np.einsum("ikjk->ij", r)


def partial_transpose_second(m, part: BlockPartition) -> np.ndarray:
    """Transpose applied inside each block; an involution that preserves the trace."""
    r = _blocks_view(m, part)
    return np.ascontiguousarray(r.transpose(0, 3, 2, 1)).reshape(part.dim, part.dim)


def trace_norm(m, tol: float = DEFAULT_TOL) -> float:
    """Sum of absolute eigenvalues of a Hermitian matrix."""
    a = as_matrix(m)
    defect = hermiticity_defect(a)
    if defect > tol:
        raise NotHermitianError(f"hermiticity defect {defect:.3e} exceeds tol {tol:.3e}")
    return float(np.sum(np.abs(np.linalg.eigvalsh((a + a.conj().T) / 2.0))))


def zero_pad(m, new_dim: int) -> np.ndarray:
    """Embed ``m`` in the top-left corner of a new_dim x new_dim zero matrix."""
    a = as_matrix(m)
    dim = a.shape[0]
    if new_dim < dim:
        raise ShrinkNotAllowedError(f"cannot pad dimension {dim} down to {new_dim}")
    out = np.zeros((new_dim, new_dim), dtype=complex)
    out[:dim, :dim] = a
    return out
