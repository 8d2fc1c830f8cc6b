"""Entanglement witnesses for 4x4 states under the (2,2) block split.

Two conventions for the partial-transpose witness coexist on purpose: the
raw trace norm ||rho^T2||_1, which exceeds 1 exactly on NPT-entangled
states and is the quantity plotted as N in the source material this
package reproduces numerically, and the standard negativity
(||rho^T2||_1 - 1)/2.  Both are reported side by side so neither gets
silently redefined.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import (
    DimensionMismatchError,
    NegativeEigenvalueBeyondToleranceError,
    ParameterOutOfRangeError,
)
from .linalg import (
    DEFAULT_TOL,
    BlockPartition,
    as_matrix,
    eig_hermitian,
    mat_power,
    partial_transpose_second,
    trace_norm,
)
from .states import WERNER_R_MAX, WERNER_R_MIN

_PART_22 = BlockPartition(2, 2)

#: sigma_y tensor sigma_y; real with anti-diagonal (-1, 1, 1, -1).
_SPIN_FLIP = np.array(
    [
        [0.0, 0.0, 0.0, -1.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
    ],
    dtype=complex,
)


class NegativityReport(NamedTuple):
    trace_norm_pt: float
    negativity: float


class WernerWitness(NamedTuple):
    trace_norm_pt: float
    concurrence: float


@dataclass(frozen=True)
class WitnessReport:
    """Partial-transpose trace norm, standard negativity and concurrence."""

    trace_norm_pt: float
    negativity: float
    concurrence: float

    def __post_init__(self) -> None:
        if self.trace_norm_pt < 1.0 - 1e-10:
            raise ParameterOutOfRangeError(
                f"trace_norm_pt={self.trace_norm_pt!r} below 1; not a unit-trace state"
            )
        if not (-1e-10 <= self.concurrence <= 1.0 + 1e-10):
            raise ParameterOutOfRangeError(
                f"concurrence={self.concurrence!r} outside [0, 1]"
            )


def _require_4x4(rho) -> np.ndarray:
    a = as_matrix(rho)
    if a.shape != (4, 4):
        raise DimensionMismatchError(f"expected a 4x4 matrix, got shape {a.shape}")
    return a


def negativity_report(rho, tol: float = DEFAULT_TOL) -> NegativityReport:
    """Trace norm of the partial transpose and the derived negativity."""
    a = _require_4x4(rho)
    tn = trace_norm(partial_transpose_second(a, _PART_22), tol=tol)
    return NegativityReport(trace_norm_pt=tn, negativity=(tn - 1.0) / 2.0)


def concurrence(rho, tol: float = DEFAULT_TOL) -> float:
    """Wootters concurrence max(0, lam1 - lam2 - lam3 - lam4).

    The lam's are square roots of the eigenvalues of the Hermitian matrix
    sqrt(rho) S conj(rho) S sqrt(rho) with S the spin flip, equivalent to
    the usual non-Hermitian product rho S conj(rho) S.  Eigenvalues within
    1e-12 of zero are zeroed before the square root: the exact zeros that
    occur at pure states otherwise pick up O(sqrt(eps)) noise.
    """
    a = _require_4x4(rho)
    root = mat_power(a, 0.5, tol=tol)
    herm = root @ _SPIN_FLIP @ a.conj() @ _SPIN_FLIP @ root
    w = eig_hermitian(herm, tol=tol).eigenvalues
    if w[0] < -1e-9:
        raise NegativeEigenvalueBeyondToleranceError(
            f"eigenvalue {w[0]:.3e} below -1e-09 in the concurrence product"
        )
    w = np.where(np.abs(w) < 1e-12, 0.0, np.maximum(w, 0.0))
    lam = np.sqrt(w)[::-1]
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def werner_closed_forms(r: float) -> WernerWitness:
    """Exact witness values on the Werner family, used as sweep oracles.

    trace_norm_pt = 3|(r+1)/4| + |(1-3r)/4| and concurrence = (3r-1)/2 for
    r > 1/3, else 0.
    """
    r = float(r)
    if not (WERNER_R_MIN <= r <= WERNER_R_MAX):
        raise ParameterOutOfRangeError(
            f"werner parameter {r!r} outside [{WERNER_R_MIN}, {WERNER_R_MAX}]"
        )
    tn = 3.0 * abs((r + 1.0) / 4.0) + abs((1.0 - 3.0 * r) / 4.0)
    c = (3.0 * r - 1.0) / 2.0 if r > 1.0 / 3.0 else 0.0
    return WernerWitness(trace_norm_pt=tn, concurrence=c)


def witness_report(rho, tol: float = DEFAULT_TOL) -> WitnessReport:
    """All three witness quantities for one state."""
    tn, neg = negativity_report(rho, tol=tol)
    return WitnessReport(trace_norm_pt=tn, negativity=neg, concurrence=concurrence(rho, tol=tol))
