"""
Brute-force ground truth: prefactored Wronskians of the seed functions, optionally augmented
by a solution of the first kind h or of the second kind h̃, built as series in x.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from sympy.polys.domains import QQ
from sympy.polys.rings import ring

from xlaguerre import config
from xlaguerre.exact.scalars import (
    ALPHA,
    LAMBDA,
    Scalar,
    ground,
    is_constant,
    render_scalar,
    to_fraction,
    to_scalar,
)
from xlaguerre.exact.series import QuasiRationalSeries, wronskian
from xlaguerre.maya import DiagramPair
from xlaguerre.seeds import (
    FIRST,
    FOURTH,
    SECOND,
    THIRD,
    SeedSpec,
    seed,
    solution_h,
    solution_htilde,
)
from xlaguerre.utils.errors import (
    DeletedState,
    NonPolynomialResult,
    ParameterDomainError,
    TruncationExhausted,
)
from xlaguerre.utils.timer import Timer

log = logging.getLogger("xlaguerre")

PLAIN, FIRST_KIND, SECOND_KIND = "plain", "first", "second"

RATIONAL_X, RX = ring("x", QQ)


def seed_specs(pair: DiagramPair) -> list[SeedSpec]:
    """f_1..f_r: L_n(x), e^x L_m(−x), x^{−α}L_{m′}(x), e^x x^{−α}L_{n′}(−x)"""
    return (
        [SeedSpec(FIRST, n) for n in pair.m1.included]
        + [SeedSpec(SECOND, m) for m in pair.m2.included]
        + [SeedSpec(THIRD, m) for m in pair.m2.excluded]
        + [SeedSpec(FOURTH, n) for n in pair.m1.excluded]
    )


@dataclass(frozen=True)
class WronskianBuild:
    """
    A prefactored Wronskian e^{−(r₂+r₄)x} x^{exponent} Wr[f₁, …, f_r(, h or h̃)].

    The exponent is (a+r₁+r₂)(r₃+r₄) for Ω, (a+r₁+r₂+1)(r₃+r₄) with h
    and (a+r₁+r₂)(r₃+r₄+1) with h̃.
    """

    pair: DiagramPair
    alpha: Scalar
    kind: str = PLAIN
    trunc: int | None = None
    lambda_expr: Scalar = field(default_factory=lambda: LAMBDA)

    @property
    def exp_rate(self) -> int:
        return -(self.pair.r2 + self.pair.r4)

    @property
    def alpha_multiple(self) -> int:
        """j in x^{j·a}"""
        extra = 1 if self.kind == SECOND_KIND else 0
        return self.pair.r3 + self.pair.r4 + extra

    @property
    def integer_power(self) -> int:
        p = self.pair
        if self.kind == FIRST_KIND:
            return (p.r1 + p.r2 + 1) * (p.r3 + p.r4)
        if self.kind == SECOND_KIND:
            return (p.r1 + p.r2) * (p.r3 + p.r4 + 1)
        return (p.r1 + p.r2) * (p.r3 + p.r4)

    def exponent(self) -> Scalar:
        return self.alpha_multiple * self.alpha + self.integer_power

    def render_prefactor(self) -> str:
        return f"e^({self.exp_rate}x) x^({render_scalar(self.exponent())})"

    def columns(self) -> list[QuasiRationalSeries]:
        functions = [seed(spec, self.alpha) for spec in seed_specs(self.pair)]
        if self.kind == FIRST_KIND:
            functions.append(solution_h(self.alpha, self.lambda_expr, self.trunc))
        elif self.kind == SECOND_KIND:
            functions.append(solution_htilde(self.alpha, self.lambda_expr, self.trunc))
        return functions

    def build(self) -> QuasiRationalSeries:
        timer = Timer(f"wronskian-{self.kind}", diagram=str(self.pair))
        columns = self.columns()
        log.debug(f"{self.kind} Wronskian of size {len(columns)} for {self.pair}")
        det = wronskian(columns, base=self.alpha)
        timer.mark("determinant")
        result = det.with_prefactor(self.alpha_multiple, self.exp_rate, self.integer_power)
        timer.stop()
        if result.is_zero():
            return result
        tag, _ = result.single_term()
        if tag != (0, 0):
            raise NonPolynomialResult(
                f"residual prefactor tag {tag} after multiplying by {self.render_prefactor()}",
                step=f"omega_{self.kind}",
                diagram=str(self.pair),
                alpha=render_scalar(self.alpha),
            )
        return result


def _default_trunc(pair: DiagramPair, needed_order: int = 0) -> int:
    return needed_order + pair.r + 1 + config.ORACLE_TRUNCATION_GUARD


def with_retry(
    build: Callable[[int], QuasiRationalSeries],
    read: Callable[[QuasiRationalSeries], object],
    trunc: int,
):
    """Double the truncation order until ``read`` stops running out of coefficients"""
    while True:
        try:
            return read(build(trunc))
        except TruncationExhausted:
            if trunc * 2 > config.ORACLE_MAX_TRUNCATION:
                raise
            log.debug(f"truncation {trunc} exhausted, retrying with {trunc * 2}")
            trunc *= 2


def omega_plain(pair: DiagramPair, alpha=ALPHA) -> QuasiRationalSeries:
    """Ω^α_{M₁,M₂}(x); seeds are exact so the result is an exact polynomial"""
    result = WronskianBuild(pair, to_scalar(alpha), PLAIN).build()
    _, series = result.single_term()
    if series.coeffs and min(series.coeffs) < 0:
        raise NonPolynomialResult(
            f"negative power x^{min(series.coeffs)} in Ω",
            step="omega_plain",
            diagram=str(pair),
        )
    return result


def omega_h(
    pair: DiagramPair, alpha=ALPHA, trunc: int | None = None, lambda_expr=LAMBDA
) -> QuasiRationalSeries:
    trunc = trunc if trunc is not None else _default_trunc(pair)
    return WronskianBuild(
        pair, to_scalar(alpha), FIRST_KIND, trunc, to_scalar(lambda_expr)
    ).build()


def omega_htilde(
    pair: DiagramPair, alpha=ALPHA, trunc: int | None = None, lambda_expr=LAMBDA
) -> QuasiRationalSeries:
    trunc = trunc if trunc is not None else _default_trunc(pair)
    return WronskianBuild(
        pair, to_scalar(alpha), SECOND_KIND, trunc, to_scalar(lambda_expr)
    ).build()


def eval_zero(series: QuasiRationalSeries) -> Scalar:
    """Constant coefficient of a prefactored Wronskian"""
    tag, s = series.single_term()
    if tag != (0, 0):
        raise NonPolynomialResult(f"residual prefactor tag {tag}", step="eval_zero")
    negative = [k for k in s.coeffs if k < 0]
    if negative:
        raise NonPolynomialResult(f"negative power x^{min(negative)}", step="eval_zero")
    return s[0]


def omega_h_at_zero(
    pair: DiagramPair, alpha=ALPHA, lambda_expr=LAMBDA, trunc: int | None = None
) -> Scalar:
    return with_retry(
        lambda n: omega_h(pair, alpha, n, lambda_expr), eval_zero, trunc or _default_trunc(pair)
    )


def omega_htilde_at_zero(
    pair: DiagramPair, alpha=ALPHA, lambda_expr=LAMBDA, trunc: int | None = None
) -> Scalar:
    return with_retry(
        lambda n: omega_htilde(pair, alpha, n, lambda_expr),
        eval_zero,
        trunc or _default_trunc(pair),
    )


def omega_plain_at_zero(pair: DiagramPair, alpha=ALPHA) -> Scalar:
    return eval_zero(omega_plain(pair, alpha))


def exceptional_polynomial(pair: DiagramPair, alpha, n: int):
    """
    Ω_{M₁,M₂}[h^α(x, n)], a polynomial in x since h terminates at λ = n.
    Raises DeletedState when it vanishes identically.
    """
    if n < 0:
        raise ValueError(f"negative degree {n}")
    # the series of h terminates inside a window of n + 2 coefficients
    result = omega_h(pair, alpha, trunc=n + 2, lambda_expr=n)
    if result.is_zero():
        raise DeletedState(
            f"λ={n} is a deleted state", step="exceptional_polynomial", diagram=str(pair)
        )
    _, series = result.single_term()
    if not series.is_exact:
        raise NonPolynomialResult(
            f"Ω[h] at λ={n} is not a polynomial", step="exceptional_polynomial", diagram=str(pair)
        )
    return series.to_poly()


def exceptional_polynomials(pair: DiagramPair, alpha, count: int) -> list[tuple[int, object]]:
    """The first ``count`` non-deleted (n, polynomial) couples"""
    found, skipped, n = [], 0, 0
    while len(found) < count:
        try:
            found.append((n, exceptional_polynomial(pair, alpha, n)))
        except DeletedState:
            skipped += 1
            log.debug(f"skipping deleted state λ={n} of {pair}")
            if skipped > config.MAX_DELETED_SKIPS:
                raise
        n += 1
    return found


def to_rational_poly(poly):
    """A polynomial in x with constant coefficients, as a QQ[x] polynomial"""
    coeffs = {}
    for (k,), c in poly.terms():
        if not is_constant(c):
            raise ParameterDomainError(
                f"coefficient {render_scalar(c)} still depends on α or λ", step="to_rational_poly"
            )
        coeffs[(k,)] = ground(c)
    return RATIONAL_X.from_dict(coeffs)


def _sign_changes(values: list) -> int:
    signs = [v > 0 for v in values if v]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots_on_halfline(poly) -> int:
    """Distinct real roots in [0, ∞) of a QQ[x] polynomial, by a Sturm sequence"""
    if poly.is_ground:
        return 0
    if not poly.get((0,), QQ.zero):
        while not poly.get((0,), QQ.zero):
            poly = poly.quo(RX)
        return 1 + count_roots_on_halfline(poly)
    sequence = poly.sturm()
    at_zero = [p.get((0,), QQ.zero) for p in sequence]
    at_infinity = [p.LC for p in sequence]
    return _sign_changes(at_zero) - _sign_changes(at_infinity)


def zero_free_on_halfline(pair: DiagramPair, alpha_value) -> bool:
    value = to_fraction(alpha_value)
    if value <= -1:
        raise ParameterDomainError(
            f"zero-freeness is decided for α > −1, got {value}",
            step="zero_free",
            diagram=str(pair),
            alpha=str(value),
        )
    omega = omega_plain(pair, to_scalar(Fraction(value)))
    if omega.is_zero():
        raise ParameterDomainError(
            f"Ω vanishes identically at α={value}", step="zero_free", diagram=str(pair)
        )
    _, series = omega.single_term()
    return count_roots_on_halfline(to_rational_poly(series.to_poly())) == 0
