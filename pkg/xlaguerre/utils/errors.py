import logging

import sentry_sdk

log = logging.getLogger("xlaguerre")


class ExceptionWithSentryDetails(Exception):
    """
    Custom exception which enriches Sentry with tags if available.
    """

    def __init__(
        self,
        message: str | None = None,
        step: str | None = None,
        diagram: str | None = None,
        alpha: str | None = None,
        *args,
    ) -> None:
        self.step = step
        self.message = message
        self.diagram = diagram
        self.alpha = alpha
        if sentry_sdk.get_client().is_active():
            with sentry_sdk.new_scope() as scope:
                scope.set_tags(
                    {
                        "step": step or "unknown",
                        "diagram": diagram or "unknown",
                        "alpha": alpha or "unknown",
                    }
                )
                sentry_sdk.capture_exception(self)
        super().__init__(message, *args)


class DiagramParseError(ExceptionWithSentryDetails):
    """Exception raised when a Maya diagram string cannot be parsed."""

    pass


class DiagramValidationError(ExceptionWithSentryDetails):
    """Exception raised when a Maya diagram has invalid index lists or an unexpected form."""

    pass


class TruncationExhausted(ExceptionWithSentryDetails):
    """Exception raised when a truncated series is read beyond its precision."""

    pass


class NonPolynomialResult(ExceptionWithSentryDetails):
    """Exception raised when a prefactored Wronskian is not a polynomial in x."""

    pass


class DeletedState(ExceptionWithSentryDetails):
    """Exception raised when the Wronskian at an integer eigenvalue vanishes identically."""

    pass


class StepPreconditionError(ExceptionWithSentryDetails):
    """Exception raised when a single-step reduction does not apply to a diagram."""

    pass


class NegativeFactorialLength(ExceptionWithSentryDetails):
    """Exception raised when a closed-form evaluation needs a negative factorial length."""

    pass


class ParameterPoleError(ExceptionWithSentryDetails):
    """Exception raised when a numeric parameter hits a pole of a series coefficient."""

    pass


class InconsistentFactorization(ExceptionWithSentryDetails):
    """Exception raised when the coefficients of a Darboux partner do not agree."""

    pass


class InadmissibleError(ExceptionWithSentryDetails):
    """Exception raised when a diagram pair does not define an admissible operator."""

    pass


class ParameterDomainError(ExceptionWithSentryDetails):
    """Exception raised when a numeric parameter is outside the supported domain."""

    pass


class ConventionError(ExceptionWithSentryDetails):
    """Exception raised when a sign or extension convention cannot be decided."""

    pass


class PoleError(ExceptionWithSentryDetails):
    """Exception raised when a function is evaluated at one of its poles."""

    pass


class ConvergenceError(ExceptionWithSentryDetails):
    """Exception raised when a numeric root search does not converge."""

    pass


class QuadratureError(ExceptionWithSentryDetails):
    """Exception raised when adaptive quadrature reports a failure."""

    pass


class OracleMismatch(ExceptionWithSentryDetails):
    """Exception raised when a closed form disagrees with the brute-force Wronskian."""

    pass


class NonAffineFactor(ExceptionWithSentryDetails):
    """Exception raised when a rational function does not split into factors affine in λ."""

    pass
