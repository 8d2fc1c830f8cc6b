"""Exception hierarchy for qmink.

Every validation failure raises a dedicated subclass of :class:`QminkError`
whose message names the violated invariant and the measured defect, so that
callers (and the CLI) can report precisely what went wrong.
"""

from __future__ import annotations


class QminkError(ValueError):
    """Base class for all qmink errors."""


class NotHermitianError(QminkError):
    """Matrix is not Hermitian within tolerance."""


class TraceNotOneError(QminkError):
    """Matrix trace differs from 1 beyond tolerance."""


class NotPositiveError(QminkError):
    """Matrix has an eigenvalue below -tolerance."""


class NoConvergenceError(QminkError):
    """Eigensolver failed to converge."""


class NegativeEigenvalueBeyondToleranceError(QminkError):
    """Fractional power requested for a matrix with a clearly negative eigenvalue."""


class NonPositiveExponentError(QminkError):
    """Exponent p (or q) must be strictly positive."""


class IndexOutOfRangeError(QminkError):
    """Block index outside the partition."""


class PartitionMismatchError(QminkError):
    """Block partition does not tile the matrix."""


class ShrinkNotAllowedError(QminkError):
    """Zero-padding cannot reduce the dimension."""


class ParameterOutOfRangeError(QminkError):
    """State-family parameter outside its admissible interval."""


class BadRankError(QminkError):
    """Requested rank outside 1..dim."""


class DimensionMismatchError(QminkError):
    """Operation requires a matrix of a specific dimension."""


class NotNormalizedError(QminkError):
    """Probabilities do not sum to 1 within tolerance."""


class NegativeProbabilityError(QminkError):
    """A probability is below -tolerance."""
