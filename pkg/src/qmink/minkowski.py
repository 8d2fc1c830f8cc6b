"""Minkowski-type trace inequalities for block-partitioned density matrices.

The one-parameter inequality compares

    lhs(p) = (Tr[(Tr_1 rho)^p])^(1/p)    with    rhs(p) = Tr[(Tr_2 rho^p)^(1/p)]

and is expected to satisfy lhs <= rhs for p >= 1, with the direction
reversed for 0 < p < 1.  The two-parameter generalization raises the inner
reductions to q and p separately:

    lhs(p,q) = (Tr[(Tr_1 rho^q)^(p/q)])^(1/p)
    rhs(p,q) = (Tr[(Tr_2 rho^p)^(q/p)])^(1/q)

Everything here reports residual = lhs - rhs, so "inequality satisfied"
means residual <= 0 on the p >= 1 branch.  The p = 2 case additionally has
a closed quadratic form in the matrix entries, exposed separately because
it is NOT the same function as the norm-form residual: the quadratic equals
(Tr[(Tr_1 rho)^2] - Tr rho^2)/2, which this module's tests pin down.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, NonPositiveExponentError
from .linalg import (
    DEFAULT_TOL,
    BlockPartition,
    DensityMatrix,
    as_matrix,
    block_trace_matrix,
    mat_power,
    partial_trace_first,
    psd_eigenvalues,
)
from .states import XStateParams, werner


@dataclass(frozen=True)
class ResidualReport:
    """Both sides of one inequality evaluation; q is None on the one-parameter branch."""

    p: float
    q: float | None
    lhs: float
    rhs: float

    @property
    def residual(self) -> float:
        return self.lhs - self.rhs


@dataclass(frozen=True)
class SweepRow:
    """One (r, p, q) evaluation inside a parameter sweep; r is None for fixed states."""

    r: float | None
    p: float
    q: float | None
    lhs: float
    rhs: float
    residual: float


@dataclass(frozen=True)
class SweepResult:
    rows: tuple[SweepRow, ...]
    #: per (p, q): the residual sign-change locations on the r grid, possibly empty
    crossings: tuple[tuple[float, float | None, tuple[float, ...]], ...]


def _require_positive(name: str, value: float) -> float:
    value = float(value)
    if not value > 0.0:
        raise NonPositiveExponentError(f"{name} must be > 0, got {value!r}")
    return value


def _trace_power(m, alpha: float, tol: float) -> float:
    """Tr[m^alpha] for PSD Hermitian m, summed over clamped eigenvalues."""
    w = psd_eigenvalues(m, tol=tol)
    return float(np.sum(w**alpha))


def one_param_residual(rho, part: BlockPartition, p: float,
                       tol: float = DEFAULT_TOL) -> ResidualReport:
    p = _require_positive("p", p)
    lhs = _trace_power(partial_trace_first(rho, part), p, tol) ** (1.0 / p)
    rhs = _trace_power(block_trace_matrix(mat_power(rho, p, tol=tol), part), 1.0 / p, tol)
    return ResidualReport(p=p, q=None, lhs=lhs, rhs=rhs)


def two_param_residual(rho, part: BlockPartition, p: float, q: float,
                       tol: float = DEFAULT_TOL) -> ResidualReport:
    p = _require_positive("p", p)
    q = _require_positive("q", q)
    lhs = _trace_power(partial_trace_first(mat_power(rho, q, tol=tol), part), p / q, tol) ** (1.0 / p)
    rhs = _trace_power(block_trace_matrix(mat_power(rho, p, tol=tol), part), q / p, tol) ** (1.0 / q)
    return ResidualReport(p=p, q=q, lhs=lhs, rhs=rhs)


def quadratic_residual_p2(rho) -> float:
    """Closed quadratic form of the p=2 residual for a 4x4 matrix.

    Equals (Tr[(Tr_1 rho)^2] - Tr rho^2)/2 identically; the combination of
    entry products below is real whenever rho is Hermitian.
    """
    a = as_matrix(rho)
    if a.shape != (4, 4):
        raise DimensionMismatchError(f"expected a 4x4 matrix, got shape {a.shape}")
    value = (
        a[0, 0] * a[2, 2]
        + a[1, 1] * a[3, 3]
        - a[0, 2] * a[2, 0]
        + a[0, 1] * a[3, 2]
        - a[0, 3] * a[3, 0]
        + a[1, 0] * a[2, 3]
        - a[1, 2] * a[2, 1]
        - a[1, 3] * a[3, 1]
    )
    return float(value.real)


def x_state_p2_residual(params: XStateParams) -> float:
    """The p=2 quadratic specialized to the X pattern: only the two couplings survive."""
    p = params
    return float(p.d1 * p.d3 + p.d2 * p.d4 - abs(p.c14) ** 2 - abs(p.c23) ** 2)


def werner_closed_residual(r: float, p: float, q: float = 1.0) -> ResidualReport:
    """Exact Werner residual from the spectral decomposition; sweep oracle.

    The Werner state is a*I + b*P for a rank-one projector P, so both sides
    collapse to scalar functions of the two eigenvalues lam1 = (1+3r)/4 and
    lam2 = (1-r)/4:

        lhs = 2^(1/p) * ((lam1^q + 3*lam2^q)/2)^(1/q)
        rhs = 2^(1/q) * ((lam1^p + 3*lam2^p)/2)^(1/p)
    """
    p = _require_positive("p", p)
    q = _require_positive("q", q)
    lam1 = (1.0 + 3.0 * r) / 4.0
    lam2 = (1.0 - r) / 4.0
    lhs = 2.0 ** (1.0 / p) * ((lam1**q + 3.0 * lam2**q) / 2.0) ** (1.0 / q)
    rhs = 2.0 ** (1.0 / q) * ((lam1**p + 3.0 * lam2**p) / 2.0) ** (1.0 / p)
    return ResidualReport(p=p, q=q, lhs=lhs, rhs=rhs)


class WernerFamily:
    """Sweep source that evaluates the Werner state at each grid point."""

    partition = BlockPartition(2, 2)

    def state_at(self, r: float) -> DensityMatrix:
        return werner(r)


class FixedStateFamily:
    """Sweep source holding one fixed state; the r column stays empty."""

    def __init__(self, rho: DensityMatrix, part: BlockPartition):
        self.rho = rho
        self.partition = part

    def state_at(self, r) -> DensityMatrix:
        return self.rho


def sign_changes(r_values, residuals) -> tuple[float, ...]:
    """Residual zero locations along a grid.

    Exact zeros count as crossings at the grid point itself; a strict sign
    flip between neighbors is located by linear interpolation.
    """
    out = []
    for r, res in zip(r_values, residuals):
        if res == 0.0:
            out.append(float(r))
    for i in range(len(residuals) - 1):
        a, b = residuals[i], residuals[i + 1]
        if a * b < 0.0:
            r0, r1 = r_values[i], r_values[i + 1]
            out.append(float(r0 + a * (r1 - r0) / (a - b)))
    return tuple(sorted(out))


def sweep(family, r_grid, pq_list, tol: float = DEFAULT_TOL) -> SweepResult:
    """Evaluate residuals over r_grid x pq_list in row-major order (r outer).

    pq_list entries are (p, q) with q None selecting the one-parameter form.
    Sign changes are located per (p, q) whenever the grid carries real r
    values; a fixed-state sweep reports empty crossing lists.
    """
    if not r_grid or not pq_list:
        raise ValueError("sweep grids must be nonempty")
    part = family.partition
    rows = []
    per_pq = [[] for _ in pq_list]
    for r in r_grid:
        rho = family.state_at(r)
        for k, (p, q) in enumerate(pq_list):
            if q is None:
                rep = one_param_residual(rho, part, p, tol=tol)
            else:
                rep = two_param_residual(rho, part, p, q, tol=tol)
            rows.append(SweepRow(r=None if r is None else float(r), p=rep.p, q=rep.q,
                                 lhs=rep.lhs, rhs=rep.rhs, residual=rep.residual))
            per_pq[k].append(rep.residual)
    gridded = all(r is not None for r in r_grid) and len(r_grid) >= 2
    crossings = []
    for k, (p, q) in enumerate(pq_list):
        locs = sign_changes(r_grid, per_pq[k]) if gridded else ()
        crossings.append((float(p), None if q is None else float(q), locs))
    return SweepResult(rows=tuple(rows), crossings=tuple(crossings))
