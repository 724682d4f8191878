"""Local quantum uncertainty for N-qubit density matrices.

Per-bipartition values via the closed eigenvalue route (one minus the
largest eigenvalue of a 3x3 Pauli correlation matrix per measured qubit),
their arithmetic mean, built-in state families, and closed-form references.
"""

from .analytic import (
    ParamOutOfRange,
    closed_form_for,
    lqu_ghz3,
    lqu_ghz4_class,
    lqu_kay,
    lqu_w3,
    lqu_w4,
    w3_correlation_eigenvalues,
)
from .core import (
    CorrelationMatrix3,
    IndexOutOfRange,
    LquReport,
    NumericalContractViolation,
    correlation_matrix,
    local_observable,
    lqu_all,
    lqu_bipartition,
    lqu_variational,
    skew_information,
)
from .linalg import (
    DimensionMismatch,
    HermitianEigenSystem,
    NoConvergence,
    NotHermitian,
    NotPositiveSemidefinite,
    hermitian_eig,
    kron,
    matrix_sqrt_psd,
    trace_product,
)
from .states import (
    FAMILY_NAMES,
    DensityMatrix,
    DensityMatrixFormatError,
    GammaOutOfRange,
    NoiseOutOfRange,
    PureState,
    StateSpec,
    UnknownFamily,
    Violation,
    build_state,
    density_matrix_from_json,
    density_matrix_to_json,
    kay_state,
    load_density_matrix,
    mix_white_noise,
    pure_state,
    random_pure,
    save_density_matrix,
    validate,
)

__all__ = [
    "CorrelationMatrix3",
    "DensityMatrix",
    "DensityMatrixFormatError",
    "DimensionMismatch",
    "FAMILY_NAMES",
    "GammaOutOfRange",
    "HermitianEigenSystem",
    "IndexOutOfRange",
    "LquReport",
    "NoConvergence",
    "NoiseOutOfRange",
    "NotHermitian",
    "NotPositiveSemidefinite",
    "NumericalContractViolation",
    "ParamOutOfRange",
    "PureState",
    "StateSpec",
    "UnknownFamily",
    "Violation",
    "build_state",
    "closed_form_for",
    "correlation_matrix",
    "density_matrix_from_json",
    "density_matrix_to_json",
    "hermitian_eig",
    "kay_state",
    "kron",
    "load_density_matrix",
    "local_observable",
    "lqu_all",
    "lqu_bipartition",
    "lqu_ghz3",
    "lqu_ghz4_class",
    "lqu_kay",
    "lqu_variational",
    "lqu_w3",
    "lqu_w4",
    "matrix_sqrt_psd",
    "mix_white_noise",
    "pure_state",
    "random_pure",
    "save_density_matrix",
    "skew_information",
    "trace_product",
    "validate",
    "w3_correlation_eigenvalues",
]
