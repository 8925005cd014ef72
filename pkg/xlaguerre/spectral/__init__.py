# ruff: noqa: F401
from .checks import (
    LevelSolution,
    eigenvalues_tau_numeric,
    level_solutions,
    orthogonality_check,
    plot_data,
)
from .numerics import NumericWeylFunction, evaluate_meromorphic, gamma_numeric
from .operator import (
    BoundaryData,
    EndpointClassification,
    MTau,
    NormalizationPair,
    OperatorData,
    Weight,
    bold_alpha,
    boundary_data,
    endpoint_classification,
    m_infinity,
    m_tau,
    m_zero,
    normalization,
    operator_data,
    spectrum,
    spectrum_diff,
    type_one_constants,
    type_one_m_infinity,
    weight,
)
from .spectra import (
    CONVENTIONS,
    EXTENSIONS,
    INFINITY,
    PAPER,
    STRICT,
    ZERO,
    Family,
    Spectrum,
    SpectrumDiff,
    disjointness_check,
    identify_friedrichs,
    poles_of,
)
