"""Deterministic random streams for reproducible state sampling.

The generator is splitmix64, chosen because the full recurrence fits in a
few lines and can be reproduced bit-for-bit from this description alone,
independent of any library version:

    state_k = (seed + k * 0x9E3779B97F4A7C15) mod 2^64,  k = 1, 2, ...
    z = state_k
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9  mod 2^64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB  mod 2^64
    output_k = z ^ (z >> 31)

Uniform doubles map each 64-bit word to (0, 1) via
``u = ((word >> 11) + 0.5) * 2**-53`` (never exactly 0 or 1, so logs are
safe).  Normals come from the Box-Muller transform on consecutive uniform
pairs: ``z0 = sqrt(-2 ln u1) cos(2 pi u2)``, ``z1 = sqrt(-2 ln u1) sin(2 pi u2)``.
A complex standard normal consumes one pair: ``(z0 + i z1) / sqrt(2)``
(unit total variance).

All functions are pure: the same seed always yields the same array.
"""

from __future__ import annotations

import numpy as np

_MASK64 = 0xFFFFFFFFFFFFFFFF
_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)


def splitmix64(seed: int, n: int) -> np.ndarray:
    """Return the first ``n`` splitmix64 outputs for ``seed`` as uint64."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    with np.errstate(over="ignore"):
        state = np.uint64(seed & _MASK64) + np.arange(1, n + 1, dtype=np.uint64) * _GOLDEN
        z = (state ^ (state >> np.uint64(30))) * _MIX1
        z = (z ^ (z >> np.uint64(27))) * _MIX2
        return z ^ (z >> np.uint64(31))


def uniforms(seed: int, n: int) -> np.ndarray:
    """``n`` doubles in the open interval (0, 1)."""
    words = splitmix64(seed, n)
    return ((words >> np.uint64(11)).astype(np.float64) + 0.5) * 2.0**-53


def standard_normals(seed: int, n: int) -> np.ndarray:
    """``n`` standard normal doubles via Box-Muller on the uniform stream."""
    pairs = (n + 1) // 2
    u = uniforms(seed, 2 * pairs)
    radius = np.sqrt(-2.0 * np.log(u[0::2]))
    angle = 2.0 * np.pi * u[1::2]
    z = np.empty(2 * pairs)
    z[0::2] = radius * np.cos(angle)
    z[1::2] = radius * np.sin(angle)
    return z[:n]


def complex_normals(seed: int, n: int) -> np.ndarray:
    """``n`` standard complex normals (unit total variance), one Box-Muller pair each."""
    z = standard_normals(seed, 2 * n)
    return (z[0::2] + 1j * z[1::2]) / np.sqrt(2.0)
