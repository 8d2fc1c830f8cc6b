"""Spin tomograms of a two-qubit state and the derived information quantities.

A tomogram is the diagonal of (U1 x U2) rho (U1 x U2)^dag in the fixed
product basis ordered (uu, ud, du, dd), where U1, U2 are SU(2) rotations.
Shannon mutual information of that joint distribution, maximized over the
measurement angles, gives the tomographic information i_t; comparing it
with the von Neumann mutual information i_q yields delta_i = i_q - i_t.

Angles follow the (theta, phi, psi) Euler-style convention of :func:`su2`.
The tomogram diagonal does not depend on phi (phi enters U as a left
diagonal phase, which cancels in diag(U rho U^dag)), so the maximization
runs over (theta1, theta2, psi1, psi2) only with phi1 = phi2 = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.optimize import minimize

from .errors import (
    DimensionMismatchError,
    NegativeProbabilityError,
    NotNormalizedError,
    ParameterOutOfRangeError,
)
from .linalg import (
    DEFAULT_TOL,
    BlockPartition,
    as_matrix,
    block_trace_matrix,
    partial_trace_first,
    psd_eigenvalues,
)

TWO_PI = 2.0 * math.pi

#: Default angle-grid points per axis for the i_t maximization.
GRID_N_DEFAULT = 12
#: Default simplex-refinement evaluation budget after the grid stage.
REFINE_DEFAULT = 400


def _wrap(x: float, period: float = TWO_PI) -> float:
    """Reduce x into [0, period) exactly (fmod introduces no rounding)."""
    y = math.fmod(x, period)
    if y < 0.0:
        y += period
    if y >= period:
        y = 0.0
    return y


@dataclass(frozen=True)
class TomographyAngles:
    """Measurement angles for the two qubits, canonicalized on construction.

    theta lands in [0, pi] and phi, psi in [0, 2*pi).  Reduction uses the
    exact symmetry U(2*pi - theta, phi + pi, psi + pi) = U(theta, phi, psi)
    together with 2*pi periodicity up to a global sign, both of which leave
    every tomogram unchanged.
    """

    theta1: float
    theta2: float
    phi1: float = 0.0
    phi2: float = 0.0
    psi1: float = 0.0
    psi2: float = 0.0

    def __post_init__(self) -> None:
        for name in ("theta1", "theta2", "phi1", "phi2", "psi1", "psi2"):
            if not math.isfinite(float(getattr(self, name))):
                raise ParameterOutOfRangeError(f"angle {name} must be finite")
        t1, f1, s1 = _canonical_triple(self.theta1, self.phi1, self.psi1)
        t2, f2, s2 = _canonical_triple(self.theta2, self.phi2, self.psi2)
        object.__setattr__(self, "theta1", t1)
        object.__setattr__(self, "phi1", f1)
        object.__setattr__(self, "psi1", s1)
        object.__setattr__(self, "theta2", t2)
        object.__setattr__(self, "phi2", f2)
        object.__setattr__(self, "psi2", s2)


def _canonical_triple(theta: float, phi: float, psi: float) -> tuple[float, float, float]:
    t = _wrap(float(theta))
    phi = float(phi)
    psi = float(psi)
    if t > math.pi:
        t = TWO_PI - t
        phi += math.pi
        psi += math.pi
    return t, _wrap(phi), _wrap(psi)


@dataclass(frozen=True)
class Tomogram:
    """Joint outcome distribution (uu, ud, du, dd); validated on construction."""

    w_uu: float
    w_ud: float
    w_du: float
    w_dd: float

    def __post_init__(self) -> None:
        for name, w in zip(("w_uu", "w_ud", "w_du", "w_dd"), self.components()):
            if w < -1e-12:
                raise NegativeProbabilityError(f"{name}={w!r} below -1e-12")
            if w > 1.0 + 1e-12:
                raise NotNormalizedError(f"{name}={w!r} above 1")
        total = sum(self.components())
        if abs(total - 1.0) > 1e-10:
            raise NotNormalizedError(f"components sum to {total!r}, expected 1")

    def components(self) -> tuple[float, float, float, float]:
        return (self.w_uu, self.w_ud, self.w_du, self.w_dd)

    def probabilities(self) -> tuple[float, float, float, float]:
        """Components with sub-tolerance negatives clamped to 0."""
        return tuple(max(0.0, w) for w in self.components())


@dataclass(frozen=True)
class InfoReport:
    """Entropies (nats), both mutual informations and their difference."""

    s1: float
    s2: float
    s12: float
    i_q: float
    i_t: float
    delta_i: float
    argmax_angles: TomographyAngles


class MutualInfo(NamedTuple):
    s1: float
    s2: float
    s12: float
    i_q: float


def shannon_entropy(probs) -> float:
    """-sum(p ln p) in nats, with 0 ln 0 = 0.

    Entries in [-1e-12, 0) are clamped to 0; anything more negative is an
    error, as is a total further than 1e-9 from 1.
    """
    p = np.asarray(probs, dtype=float).ravel()
    if p.size == 0:
        raise NotNormalizedError("empty probability vector")
    lo = float(p.min())
    if lo < -1e-12:
        raise NegativeProbabilityError(f"probability {lo!r} below -1e-12")
    p = np.maximum(p, 0.0)
    total = float(p.sum())
    if abs(total - 1.0) > 1e-9:
        raise NotNormalizedError(f"probabilities sum to {total!r}, expected 1")
    pos = p[p > 0.0]
    return float(-np.sum(pos * np.log(pos)))


def von_neumann_entropy(rho, tol: float = DEFAULT_TOL) -> float:
    """-Tr[rho ln rho] in nats over the clamped spectrum."""
    w = psd_eigenvalues(rho, tol=tol)
    pos = w[w > 0.0]
    return float(-np.sum(pos * np.log(pos)))


def su2(theta: float, phi: float, psi: float) -> np.ndarray:
    """The 2x2 special unitary with Euler-style angles (theta, phi, psi)."""
    c = math.cos(theta / 2.0)
    s = math.sin(theta / 2.0)
    return np.array(
        [
            [c * np.exp(0.5j * (phi + psi)), s * np.exp(0.5j * (phi - psi))],
            [-s * np.exp(0.5j * (psi - phi)), c * np.exp(-0.5j * (phi + psi))],
        ]
    )


def _require_4x4(rho) -> np.ndarray:
    a = as_matrix(rho)
    if a.shape != (4, 4):
        raise DimensionMismatchError(f"expected a 4x4 matrix, got shape {a.shape}")
    return a


def tomogram(rho, angles: TomographyAngles) -> Tomogram:
    """Outcome distribution of local measurements rotated by the given angles."""
    a = _require_4x4(rho)
    u = np.kron(
        su2(angles.theta1, angles.phi1, angles.psi1),
        su2(angles.theta2, angles.phi2, angles.psi2),
    )
    w = np.einsum("ij,jk,ik->i", u, a, u.conj()).real
    return Tomogram(w_uu=float(w[0]), w_ud=float(w[1]), w_du=float(w[2]), w_dd=float(w[3]))


def marginals(t: Tomogram) -> tuple[tuple[float, float], tuple[float, float]]:
    """Outcome distributions of the first and second qubit separately."""
    w1 = (t.w_uu + t.w_ud, t.w_du + t.w_dd)
    w2 = (t.w_uu + t.w_du, t.w_ud + t.w_dd)
    return w1, w2


def quantum_mutual_info(rho, part: BlockPartition, tol: float = DEFAULT_TOL) -> MutualInfo:
    """Von Neumann entropies of the two reductions and the joint state.

    s1 comes from the diagonal-block sum, s2 from the block-trace matrix;
    i_q = s1 + s2 - s12 is nonnegative up to eigensolver noise.
    """
    a = as_matrix(rho)
    part.check(a.shape[0])
    s1 = von_neumann_entropy(partial_trace_first(a, part), tol=tol)
    s2 = von_neumann_entropy(block_trace_matrix(a, part), tol=tol)
    s12 = von_neumann_entropy(a, tol=tol)
    return MutualInfo(s1=s1, s2=s2, s12=s12, i_q=s1 + s2 - s12)


def tomographic_mutual_info(rho, angles: TomographyAngles) -> float:
    """Shannon mutual information of the tomogram at fixed angles."""
    t = tomogram(rho, angles)
    w1, w2 = marginals(t)
    return (
        shannon_entropy(w1) + shannon_entropy(w2) - shannon_entropy(t.probabilities())
    )


def _neg_xlogx(p: np.ndarray) -> np.ndarray:
    out = np.zeros_like(p)
    mask = p > 0.0
    out[mask] = -p[mask] * np.log(p[mask])
    return out


def maximize_tomographic_info(
    rho,
    grid_n: int = GRID_N_DEFAULT,
    refine_iters: int = REFINE_DEFAULT,
) -> tuple[float, TomographyAngles]:
    """Maximize the tomographic mutual information over measurement angles.

    Deterministic two-stage search: a dense grid over
    (theta1, theta2, psi1, psi2) in [0, pi]^2 x [0, 2*pi)^2 with phi = 0,
    then Nelder-Mead started from the best grid point (simplex edge
    pi/grid_n, evaluation budget refine_iters; skipped when the budget is
    0).  Ties on the grid resolve to the lowest flat index.
    """
    if grid_n < 8:
        raise ParameterOutOfRangeError(f"grid_n must be >= 8, got {grid_n}")
    if refine_iters < 0:
        raise ParameterOutOfRangeError(f"refine_iters must be >= 0, got {refine_iters}")
    a = _require_4x4(rho)
    rho4 = a.reshape(2, 2, 2, 2)

    thetas = np.linspace(0.0, math.pi, grid_n)
    psis = np.linspace(0.0, TWO_PI, grid_n, endpoint=False)
    c = np.cos(thetas / 2.0)
    s = np.sin(thetas / 2.0)
    e = np.exp(0.5j * psis)
    u = np.empty((grid_n, grid_n, 2, 2), dtype=complex)
    u[:, :, 0, 0] = c[:, None] * e[None, :]
    u[:, :, 0, 1] = s[:, None] * e.conj()[None, :]
    u[:, :, 1, 0] = -s[:, None] * e[None, :]
    u[:, :, 1, 1] = c[:, None] * e.conj()[None, :]
    t = np.einsum("tsaj,tsal->tsajl", u, u.conj())
    w = np.einsum("tsajl,uvbkm,jklm->tusvab", t, t, rho4).real
    w = np.maximum(w, 0.0)

    h12 = _neg_xlogx(w).sum(axis=(-2, -1))
    h1 = _neg_xlogx(w.sum(axis=-1)).sum(axis=-1)
    h2 = _neg_xlogx(w.sum(axis=-2)).sum(axis=-1)
    info = h1 + h2 - h12
    idx = np.unravel_index(int(np.argmax(info)), info.shape)
    x0 = np.array([thetas[idx[0]], thetas[idx[1]], psis[idx[2]], psis[idx[3]]])

    def objective(x):
        u1 = su2(x[0], 0.0, x[2])
        u2 = su2(x[1], 0.0, x[3])
        uu = np.kron(u1, u2)
        probs = np.maximum(np.einsum("ij,jk,ik->i", uu, a, uu.conj()).real, 0.0)
        m1 = np.array([probs[0] + probs[1], probs[2] + probs[3]])
        m2 = np.array([probs[0] + probs[2], probs[1] + probs[3]])
        val = (
            _neg_xlogx(m1).sum() + _neg_xlogx(m2).sum() - _neg_xlogx(probs).sum()
        )
        return -val

    best = x0
    if refine_iters > 0:
        edge = math.pi / grid_n
        simplex = np.vstack([x0] + [x0 + edge * np.eye(4)[k] for k in range(4)])
        res = minimize(
            objective,
            x0,
            method="Nelder-Mead",
            options={
                "initial_simplex": simplex,
                "maxiter": refine_iters,
                "maxfev": refine_iters,
                "xatol": 1e-10,
                "fatol": 1e-12,
            },
        )
        best = res.x

    angles = TomographyAngles(
        theta1=float(best[0]), theta2=float(best[1]),
        psi1=float(best[2]), psi2=float(best[3]),
    )
    return tomographic_mutual_info(rho, angles), angles


def delta_info(
    rho,
    grid_n: int = GRID_N_DEFAULT,
    refine_iters: int = REFINE_DEFAULT,
    tol: float = DEFAULT_TOL,
) -> InfoReport:
    """Full report: entropies, i_q, maximized i_t and delta_i = i_q - i_t."""
    part = BlockPartition(2, 2)
    mi = quantum_mutual_info(rho, part, tol=tol)
    i_t, angles = maximize_tomographic_info(rho, grid_n=grid_n, refine_iters=refine_iters)
    return InfoReport(
        s1=mi.s1, s2=mi.s2, s12=mi.s12, i_q=mi.i_q,
        i_t=i_t, delta_i=mi.i_q - i_t, argmax_angles=angles,
    )
