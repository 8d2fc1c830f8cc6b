"""Constructors for the states under study.

Werner two-qubit family, X-shaped 4x4 densities, qutrit embedding into the
4x4 block structure, and seeded random densities from a Ginibre-style
ensemble with explicit rank control.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    BadRankError,
    DimensionMismatchError,
    NotPositiveError,
    ParameterOutOfRangeError,
    TraceNotOneError,
)
from .linalg import DEFAULT_TOL, DensityMatrix, as_matrix, validate_density, zero_pad
from .rng import complex_normals

WERNER_R_MIN = -1.0 / 3.0
WERNER_R_MAX = 1.0


def werner(r: float) -> DensityMatrix:
    """Two-qubit Werner state with mixing parameter r in [-1/3, 1].

    The matrix is diagonal except for the corner coupling r/2; its spectrum
    is (1+3r)/4 once and (1-r)/4 three times.  Values of r outside the range
    are rejected, not clamped, because the matrix stops being positive there.
    """
    r = float(r)
    if not (WERNER_R_MIN <= r <= WERNER_R_MAX):
        raise ParameterOutOfRangeError(
            f"werner parameter {r!r} outside [{WERNER_R_MIN}, {WERNER_R_MAX}]"
        )
    a = (1.0 + r) / 4.0
    b = (1.0 - r) / 4.0
    m = np.array(
        [
            [a, 0.0, 0.0, r / 2.0],
            [0.0, b, 0.0, 0.0],
            [0.0, 0.0, b, 0.0],
            [r / 2.0, 0.0, 0.0, a],
        ],
        dtype=complex,
    )
    return validate_density(m)


@dataclass(frozen=True)
class XStateParams:
    """Parameters of a 4x4 density with the X sparsity pattern.

    d1..d4 are the diagonal entries, c14 and c23 the two anti-diagonal
    couplings.  Positivity decouples into the two 2x2 blocks (1,4) and
    (2,3), so it reduces to |c14|^2 <= d1*d4 and |c23|^2 <= d2*d3.
    """

    d1: float
    d2: float
    d3: float
    d4: float
    c14: complex = 0.0
    c23: complex = 0.0

    def __post_init__(self) -> None:
        diag = (self.d1, self.d2, self.d3, self.d4)
        for k, d in enumerate(diag, start=1):
            if d < 0.0:
                raise NotPositiveError(f"diagonal entry d{k}={d!r} is negative")
        total = sum(diag)
        if abs(total - 1.0) > 1e-9:
            raise TraceNotOneError(f"diagonal sums to {total!r}, expected 1")
        if abs(self.c14) ** 2 > self.d1 * self.d4 + 1e-12:
            raise NotPositiveError(
                f"|c14|^2={abs(self.c14) ** 2!r} exceeds d1*d4={self.d1 * self.d4!r}"
            )
        if abs(self.c23) ** 2 > self.d2 * self.d3 + 1e-12:
            raise NotPositiveError(
                f"|c23|^2={abs(self.c23) ** 2!r} exceeds d2*d3={self.d2 * self.d3!r}"
            )


def x_state(params: XStateParams, tol: float = DEFAULT_TOL) -> DensityMatrix:
    """Assemble the X-pattern matrix from validated parameters."""
    p = params
    m = np.array(
        [
            [p.d1, 0.0, 0.0, p.c14],
            [0.0, p.d2, p.c23, 0.0],
            [0.0, np.conj(p.c23), p.d3, 0.0],
            [np.conj(p.c14), 0.0, 0.0, p.d4],
        ],
        dtype=complex,
    )
    return validate_density(m, tol=tol)


def werner_x_params(r: float) -> XStateParams:
    """The Werner state expressed in X-state parameters."""
    if not (WERNER_R_MIN <= r <= WERNER_R_MAX):
        raise ParameterOutOfRangeError(
            f"werner parameter {r!r} outside [{WERNER_R_MIN}, {WERNER_R_MAX}]"
        )
    a = (1.0 + r) / 4.0
    b = (1.0 - r) / 4.0
    return XStateParams(d1=a, d2=b, d3=b, d4=a, c14=r / 2.0, c23=0.0)


def embed_qutrit(rho3, tol: float = DEFAULT_TOL) -> DensityMatrix:
    """Embed a 3x3 density into 4x4 by appending a zero row and column.

    The embedding preserves the spectrum (one extra zero eigenvalue) and
    places the qutrit inside the 2x2 block partition of the larger space.
    """
    a = as_matrix(rho3)
    if a.shape != (3, 3):
        raise DimensionMismatchError(f"expected a 3x3 matrix, got shape {a.shape}")
    validate_density(a, tol=tol)
    return validate_density(zero_pad(a, 4), tol=tol)


def random_density(dim: int, rank: int, seed: int, tol: float = DEFAULT_TOL) -> DensityMatrix:
    """Seeded random density matrix of the given dimension and rank.

    Draws a dim x rank matrix G of standard complex normals from the
    deterministic stream for ``seed`` and returns G G^dag normalized to unit
    trace.  The same seed always yields the bit-identical matrix.
    """
    if dim < 2:
        raise BadRankError(f"dimension must be >= 2, got {dim}")
    if not (1 <= rank <= dim):
        raise BadRankError(f"rank must lie in 1..{dim}, got {rank}")
    g = complex_normals(seed, dim * rank).reshape(dim, rank)
    m = g @ g.conj().T
    m /= np.trace(m).real
    return validate_density(m, tol=tol)
