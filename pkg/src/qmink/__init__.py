"""Trace inequalities, tomographic information and entanglement witnesses
for small density matrices."""

from .errors import (
    BadRankError,
    DimensionMismatchError,
    IndexOutOfRangeError,
    NegativeEigenvalueBeyondToleranceError,
    NegativeProbabilityError,
    NoConvergenceError,
    NonPositiveExponentError,
    NotHermitianError,
    NotNormalizedError,
    NotPositiveError,
    ParameterOutOfRangeError,
    PartitionMismatchError,
    QminkError,
    ShrinkNotAllowedError,
    TraceNotOneError,
)
from .linalg import (
    DEFAULT_TOL,
    BlockPartition,
    DensityMatrix,
    Spectrum,
    block,
    block_trace_matrix,
    eig_hermitian,
    hermiticity_defect,
    mat_power,
    partial_trace_first,
    partial_transpose_second,
    psd_eigenvalues,
    trace_norm,
    validate_density,
    zero_pad,
)
from .matio import format_matrix, parse_matrix, read_matrix, write_matrix
from .minkowski import (
    FixedStateFamily,
    ResidualReport,
    SweepResult,
    SweepRow,
    WernerFamily,
    one_param_residual,
    quadratic_residual_p2,
    sign_changes,
    sweep,
    two_param_residual,
    werner_closed_residual,
    x_state_p2_residual,
)
from .rng import complex_normals, splitmix64, standard_normals, uniforms
from .states import (
    XStateParams,
    embed_qutrit,
    random_density,
    werner,
    werner_x_params,
    x_state,
)
from .tomography import (
    InfoReport,
    MutualInfo,
    Tomogram,
    TomographyAngles,
    delta_info,
    marginals,
    maximize_tomographic_info,
    quantum_mutual_info,
    shannon_entropy,
    su2,
    tomogram,
    tomographic_mutual_info,
    von_neumann_entropy,
)
from .witnesses import (
    NegativityReport,
    WernerWitness,
    WitnessReport,
    concurrence,
    negativity_report,
    werner_closed_forms,
    witness_report,
)

__version__ = "0.1.0"
