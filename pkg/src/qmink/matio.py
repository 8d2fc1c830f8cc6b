"""Plain-text serialization of complex square matrices.

Format: the first non-blank line holds the dimension N.  Each of the next
N lines holds 2N whitespace-separated decimal numbers, the real and
imaginary part of each entry in row order (re im re im ...).  Blank lines
and lines starting with ``#`` are ignored.  Writing uses 17 significant
digits so a write/read round trip reproduces every float bit-exactly.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatchError
from .linalg import as_matrix


def format_matrix(m) -> str:
    a = as_matrix(m)
    n = a.shape[0]
    lines = [str(n)]
    for row in a:
        parts = []
        for z in row:
            parts.append(f"{z.real:.17g}")
            parts.append(f"{z.imag:.17g}")
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> np.ndarray:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines())
             if ln and not ln.startswith("#")]
    if not lines:
        raise DimensionMismatchError("no matrix data found")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise DimensionMismatchError(f"bad dimension line {lines[0]!r}") from exc
    if n < 1:
        raise DimensionMismatchError(f"dimension must be >= 1, got {n}")
    if len(lines) < 1 + n:
        raise DimensionMismatchError(f"expected {n} matrix rows, found {len(lines) - 1}")
    out = np.empty((n, n), dtype=complex)
    for r in range(n):
        fields = lines[1 + r].split()
        if len(fields) != 2 * n:
            raise DimensionMismatchError(
                f"row {r + 1}: expected {2 * n} numbers, found {len(fields)}"
            )
        vals = [float(f) for f in fields]
        out[r] = [complex(vals[2 * c], vals[2 * c + 1]) for c in range(n)]
    return out


def write_matrix(path, m) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_matrix(m))


def read_matrix(path) -> np.ndarray:
    with open(path, "r", encoding="ascii") as fh:
        return parse_matrix(fh.read())
