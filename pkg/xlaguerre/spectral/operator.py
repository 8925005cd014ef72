"""
The exceptional Laguerre operator of a diagram pair: its weight, the boundary data at x = 0,
and the Weyl m-functions of its self-adjoint extensions.

A deficiency element splits as 𝔠·u₁ + 𝔇·u₂ over the fundamental system normalized at 0, with

    𝔠 = −𝛂 · C · Γ(−α) · Ω_{μ,ν}[h^{α′}(0, λ+t₁)] / (Γ(−λ−α) · Ω(0))
    𝔇 = −D · Γ(α) · Ω_{μ′,ν′}[h̃^{α″}(0, λ+t₁′)] / (Γ(−λ) · Ω(0))

and M∞ = 𝔇/𝔠, M₀ = −𝔠/𝔇, Mτ = (1 + τM∞)/(τ − M∞).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from xlaguerre import config
from xlaguerre.evalzero import eval_first_kind, eval_plain, eval_second_kind
from xlaguerre.exact.meromorphic import FactoredMeromorphic, GammaFactor
from xlaguerre.exact.scalars import (
    ALPHA,
    LAMBDA,
    AffinePoint,
    Scalar,
    is_constant,
    render_scalar,
    rising_factorial,
    to_fraction,
    to_scalar,
)
from xlaguerre.maya import DiagramPair, conjugate_partition_length, is_even
from xlaguerre.oracle import omega_plain
from xlaguerre.shifts import ShiftReport, shift_report
from xlaguerre.spectral.numerics import evaluate_meromorphic
from xlaguerre.spectral.spectra import (
    INFINITY,
    PAPER,
    STRICT,
    ZERO,
    Spectrum,
    SpectrumDiff,
    poles_of,
    spectrum_difference,
)
from xlaguerre.utils.errors import (
    DiagramValidationError,
    InadmissibleError,
    ParameterDomainError,
    PoleError,
)

log = logging.getLogger("xlaguerre")

LIMIT_CIRCLE, LIMIT_POINT = "limit-circle", "limit-point"
TAU_SYMBOL, TAU_INFINITY = "τ", "∞"

ORIGIN = AffinePoint(s=0, q=Fraction(0))


def _affine(value: Scalar, what: str) -> AffinePoint:
    try:
        return AffinePoint.of(value)
    except ValueError as e:
        raise ParameterDomainError(
            f"{what} = {render_scalar(value)} is not of the form q + s·α", step="affine"
        ) from e


def _bold_alpha(report: ShiftReport) -> Scalar:
    """
    α′ + r(μ) + r(ν) from the canonical side, checked against α″ − r(μ′) − r(ν′) on the
    conjugate side
    """
    first, second = report.first, report.second
    canonical = report.alpha_prime + first.mu.length + first.nu.length
    conjugate = (
        report.alpha_second
        - conjugate_partition_length(report.pair.m1, second.t1p)
        - conjugate_partition_length(report.pair.m2, second.t2p)
    )
    if canonical != conjugate:
        raise DiagramValidationError(
            f"𝛂 is {render_scalar(canonical)} on the canonical side "
            f"but {render_scalar(conjugate)} on the conjugate side",
            step="bold_alpha",
            diagram=str(report.pair),
        )
    return canonical


def bold_alpha(pair: DiagramPair, alpha=ALPHA) -> Scalar:
    """Exponent of x in the weight, 𝛂 = α − t₁ − t₂ + r(μ) + r(ν)"""
    return _bold_alpha(shift_report(pair, alpha))


@dataclass(frozen=True)
class EndpointClassification:
    zero: str
    infinity: str = LIMIT_POINT
    deficiency: tuple[int, int] | None = None

    def as_dict(self) -> dict:
        return {
            "zero": self.zero,
            "infinity": self.infinity,
            "deficiency": list(self.deficiency) if self.deficiency else None,
        }


def endpoint_classification(bold_alpha_value) -> EndpointClassification:
    """Limit-circle at 0 iff −1 < 𝛂 < 1; ∞ is always limit-point"""
    value = to_scalar(bold_alpha_value)
    if not is_constant(value):
        return EndpointClassification(zero=f"{LIMIT_CIRCLE} iff -1 < {render_scalar(value)} < 1")
    value = to_fraction(value)
    if value <= -1:
        raise ParameterDomainError(
            f"𝛂 = {value} ≤ -1: the weight is not integrable at 0",
            step="endpoint_classification",
        )
    if value < 1:
        return EndpointClassification(zero=LIMIT_CIRCLE, deficiency=(1, 1))
    return EndpointClassification(zero=LIMIT_POINT, deficiency=(0, 0))


@dataclass(frozen=True)
class OperatorData:
    pair: DiagramPair
    alpha: Scalar
    shifts: ShiftReport
    bold_alpha: Scalar
    omega_zero: Scalar

    @property
    def is_numeric(self) -> bool:
        return is_constant(self.alpha)

    @property
    def alpha_value(self) -> Fraction | None:
        return to_fraction(self.alpha) if self.is_numeric else None

    @property
    def admissible(self) -> bool:
        return is_even(self.shifts.first.mu)

    @property
    def sign_suppressed(self) -> bool:
        return self.pair.r > 0

    def classification(self) -> EndpointClassification:
        return endpoint_classification(self.bold_alpha)

    def warnings(self) -> list[str]:
        warnings = []
        if self.sign_suppressed:
            warnings.append("𝔠, 𝔇 and the m-functions are known up to a global sign")
        if self.is_numeric and self.classification().zero == LIMIT_POINT:
            warnings.append(
                f"𝛂 = {render_scalar(self.bold_alpha)} ≥ 1: x = 0 is limit-point, "
                "the extensions coincide"
            )
        return warnings


@lru_cache(maxsize=256)
def _operator_data(pair: DiagramPair, alpha: Scalar) -> OperatorData:
    report = shift_report(pair, alpha)
    bold = _bold_alpha(report)
    omega_zero = report.first.C3 * eval_plain(report.first.mu, report.first.nu, report.alpha_prime)
    if not omega_zero:
        raise InadmissibleError(
            "Ω(0) = 0", step="operator_data", diagram=str(pair), alpha=render_scalar(alpha)
        )
    if is_constant(bold) and to_fraction(bold) <= -1:
        raise ParameterDomainError(
            f"𝛂 = {render_scalar(bold)} ≤ -1",
            step="operator_data",
            diagram=str(pair),
            alpha=render_scalar(alpha),
        )
    log.debug(f"operator data of {pair}: 𝛂 = {render_scalar(bold)}")
    return OperatorData(pair, alpha, report, bold, omega_zero)


def operator_data(pair: DiagramPair, alpha=ALPHA) -> OperatorData:
    return _operator_data(pair, to_scalar(alpha))


@dataclass(frozen=True)
class Weight:
    bold_alpha: Scalar
    omega: object

    def render(self) -> str:
        head = f"x^({render_scalar(self.bold_alpha)}) e^(-x)"
        if self.omega == 1:
            return head
        return f"{head} / [{render_scalar(self.omega)}]^2"


def weight(pair: DiagramPair, alpha=ALPHA) -> Weight:
    """W(x) = x^𝛂 e^{−x} / Ω(x)², for an even μ only"""
    data = operator_data(pair, alpha)
    if not data.admissible:
        raise InadmissibleError(
            f"μ = {data.shifts.first.mu} is not even",
            step="weight",
            diagram=str(pair),
            alpha=render_scalar(data.alpha),
        )
    _, series = omega_plain(pair, data.alpha).single_term()
    return Weight(data.bold_alpha, series.to_poly())


@dataclass(frozen=True)
class BoundaryData:
    """The normalized solutions at 0 and the boundary maps they induce"""

    y1: str
    y2: str
    gamma0: str
    gamma1: str

    def as_dict(self) -> dict:
        return {"y1": self.y1, "y2": self.y2, "gamma0": self.gamma0, "gamma1": self.gamma1}


def boundary_data(pair: DiagramPair, alpha=ALPHA) -> BoundaryData:
    data = operator_data(pair, alpha)
    bold, omega = render_scalar(data.bold_alpha), render_scalar(data.omega_zero)
    return BoundaryData(
        y1=f"ỹ₁(x) = -({omega})/({bold})",
        y2=f"ỹ₂(x) = ({omega})·x^(-({bold}))",
        gamma0=f"Γ₀f = lim x→0⁺ -(({bold})·f(x) + x·f'(x))/({omega})",
        gamma1=f"Γ₁f = lim x→0⁺ x^({bold}+1)·f'(x)/(({bold})·({omega}))",
    )


@dataclass(frozen=True)
class NormalizationPair:
    """Quasi-derivatives 𝔠 = χ^{[0]}(0, λ) and 𝔇 = χ^{[1]}(0, λ) of the deficiency element"""

    frak_c: FactoredMeromorphic
    frak_d: FactoredMeromorphic


def normalization(pair: DiagramPair, alpha=ALPHA) -> NormalizationPair:
    data = operator_data(pair, alpha)
    report, a = data.shifts, data.alpha
    first, second = report.first, report.second
    e1 = eval_first_kind(first.mu, first.nu, report.alpha_prime, LAMBDA + first.t1)
    e2 = eval_second_kind(second.mup, second.nup, report.alpha_second, LAMBDA + second.t1p)
    try:
        c_part = FactoredMeromorphic.from_scalar(
            -data.bold_alpha * report.C * e1 / data.omega_zero, data.sign_suppressed
        )
        d_part = FactoredMeromorphic.from_scalar(
            -report.D * e2 / data.omega_zero, data.sign_suppressed
        )
    except ZeroDivisionError as e:
        raise ParameterDomainError(
            "𝔠 or 𝔇 vanishes identically: α is not generic",
            step="normalization",
            diagram=str(pair),
            alpha=render_scalar(a),
        ) from e
    minus_alpha, plus_alpha = _affine(-a, "-α"), _affine(a, "α")
    frak_c = c_part * FactoredMeromorphic.gamma_ratio(
        [GammaFactor(minus_alpha, lam=False)], [GammaFactor(minus_alpha)]
    )
    frak_d = d_part * FactoredMeromorphic.gamma_ratio(
        [GammaFactor(plus_alpha, lam=False)], [GammaFactor(ORIGIN)]
    )
    return NormalizationPair(frak_c, frak_d)


def m_infinity(pair: DiagramPair, alpha=ALPHA) -> FactoredMeromorphic:
    pair_ = normalization(pair, alpha)
    return pair_.frak_d / pair_.frak_c


def m_zero(pair: DiagramPair, alpha=ALPHA) -> FactoredMeromorphic:
    pair_ = normalization(pair, alpha)
    return -(pair_.frak_c / pair_.frak_d)


@dataclass(frozen=True)
class MTau:
    """Mτ = (𝔠 + τ𝔇)/(τ𝔠 − 𝔇), kept unreduced; τ is a rational, "τ" or "∞" """

    frak_c: FactoredMeromorphic
    frak_d: FactoredMeromorphic
    tau: Fraction | str = TAU_SYMBOL

    def _tau_text(self) -> str:
        return str(self.tau)

    def render(self) -> str:
        if self.tau == TAU_INFINITY:
            return f"M∞(λ) = {self.frak_d / self.frak_c}"
        t = self._tau_text()
        c, d = self.frak_c, self.frak_d
        return f"M_{t}(λ) = ([{c}] + {t}·[{d}]) / ({t}·[{c}] - [{d}])"

    def eigenvalue_condition(self) -> str:
        """τ·𝔠 = 𝔇 with the λ-Gammas of the denominators cleared"""
        _, c_den = self.frak_c.lambda_gammas()
        _, d_den = self.frak_d.lambda_gammas()
        clear = FactoredMeromorphic.gamma_ratio(c_den + d_den, [])
        lhs, rhs = self.frak_c * clear, self.frak_d * clear
        if self.tau == TAU_INFINITY:
            return f"{lhs} = 0"
        if self.tau == 0:
            return f"{rhs} = 0"
        return f"{self._tau_text()}·{lhs} = {rhs}"

    def evaluate(self, lam, alpha_value=None) -> float:
        if self.tau == TAU_SYMBOL:
            raise ParameterDomainError("a numeric τ is needed", step="m_tau")
        c = evaluate_meromorphic(self.frak_c, lam, alpha_value)
        d = evaluate_meromorphic(self.frak_d, lam, alpha_value)
        try:
            if self.tau == TAU_INFINITY:
                return float(d / c)
            t = Fraction(self.tau)
            tau = float(t)
            return float((c + tau * d) / (tau * c - d))
        except ZeroDivisionError as e:
            raise PoleError(f"M_{self._tau_text()} has a pole at λ={lam}", step="m_tau") from e


def m_tau(pair: DiagramPair, alpha=ALPHA, tau: Fraction | str = TAU_SYMBOL) -> MTau:
    if not isinstance(tau, str):
        tau = to_fraction(tau)
    elif tau not in (TAU_SYMBOL, TAU_INFINITY):
        tau = to_fraction(tau)
    pair_ = normalization(pair, alpha)
    return MTau(pair_.frak_c, pair_.frak_d, tau)


def _check_generic(data: OperatorData) -> None:
    value = data.alpha_value
    if value is not None and value.denominator == 1:
        raise ParameterDomainError(
            f"α = {value} is an integer: families of eigenvalues collide",
            step="spectrum",
            diagram=str(data.pair),
            alpha=str(value),
        )


def spectrum(
    pair: DiagramPair,
    alpha=ALPHA,
    extension: str = INFINITY,
    convention: str | None = None,
) -> Spectrum:
    """Eigenvalues of 𝓛∞ (poles of M∞) or 𝓛₀ (poles of M₀)"""
    if extension not in (ZERO, INFINITY):
        raise ValueError(f"unknown extension '{extension}'")
    convention = convention or config.POLE_CONVENTION
    _check_generic(operator_data(pair, alpha))
    function = m_infinity(pair, alpha) if extension == INFINITY else m_zero(pair, alpha)
    return poles_of(function, convention)


def spectrum_diff(pair: DiagramPair, alpha=ALPHA, extension: str = INFINITY) -> SpectrumDiff:
    paper = spectrum(pair, alpha, extension, PAPER)
    strict = spectrum(pair, alpha, extension, STRICT)
    diff = spectrum_difference(paper, strict)
    if not diff.is_empty:
        log.warning(f"pole conventions disagree on σ(L_{extension}) of {pair}: {diff.as_dict()}")
    return diff


def type_one_constants(m: int, alpha=ALPHA) -> tuple[FactoredMeromorphic, FactoredMeromorphic]:
    """
    C^α_m(λ) = −Γ(m+α)/((λ+m+α)Γ(α)Γ(m+1)) and D^α_m = −Γ(m+1)Γ(α)/((1−α)Γ(m+α))
    """
    a = to_scalar(alpha)
    m_alpha, alpha_point = _affine(a + m, "m+α"), _affine(a, "α")
    constant_c = FactoredMeromorphic(
        constant=to_scalar(Fraction(-1, factorial(m))),
        gamma_num=(GammaFactor(m_alpha, lam=False),),
        gamma_den=(GammaFactor(alpha_point, lam=False),),
        roots_den=(m_alpha.negated(),),
    )
    constant_d = FactoredMeromorphic(
        constant=-factorial(m) / (1 - a),
        gamma_num=(GammaFactor(alpha_point, lam=False),),
        gamma_den=(GammaFactor(m_alpha, lam=False),),
    )
    return constant_c, constant_d


def type_one_m_infinity(m: int, alpha=ALPHA) -> FactoredMeromorphic:
    """−[L_m^{α−1}(0)]² Γ(α)Γ(1−α−λ) / ((λ+m+α)Γ(−λ)Γ(1−α))"""
    a = to_scalar(alpha)
    at_zero = rising_factorial(a, m) / factorial(m)
    one_minus_alpha = _affine(1 - a, "1-α")
    return FactoredMeromorphic(
        constant=-(at_zero**2),
        gamma_num=(GammaFactor(_affine(a, "α"), lam=False), GammaFactor(one_minus_alpha)),
        gamma_den=(GammaFactor(ORIGIN), GammaFactor(one_minus_alpha, lam=False)),
        roots_den=(_affine(-a - m, "-m-α"),),
    )
