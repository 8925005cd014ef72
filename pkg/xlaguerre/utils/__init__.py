# ruff: noqa: F401
from .errors import (
    ConventionError,
    ConvergenceError,
    DeletedState,
    DiagramParseError,
    DiagramValidationError,
    ExceptionWithSentryDetails,
    InadmissibleError,
    InconsistentFactorization,
    NegativeFactorialLength,
    NonAffineFactor,
    NonPolynomialResult,
    OracleMismatch,
    ParameterDomainError,
    ParameterPoleError,
    PoleError,
    QuadratureError,
    StepPreconditionError,
    TruncationExhausted,
)
from .timer import Timer
