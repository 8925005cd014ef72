import logging
from dataclasses import dataclass
from math import factorial

from xlaguerre import config
from xlaguerre.exact.scalars import (
    ONE,
    Scalar,
    render_scalar,
    rising_factorial,
    scalar_add,
    scalar_div,
    scalar_mul,
    to_scalar,
)
from xlaguerre.exact.series import SERIES_RING, LaurentSeries, QuasiRationalSeries, Tag
from xlaguerre.utils.errors import ParameterPoleError

log = logging.getLogger("xlaguerre")

FIRST, SECOND, THIRD, FOURTH = 1, 2, 3, 4

# prefactor x^{j·α} e^{k·x} of each seed family
KIND_TAGS: dict[int, Tag] = {
    FIRST: (0, 0),
    SECOND: (0, 1),
    THIRD: (-1, 0),
    FOURTH: (-1, 1),
}


def laguerre(n: int, param):
    """
    L_n^{param}(x) from the explicit sum
    Σ_k (−1)^k (param+k+1)^{(n−k)} / ((n−k)! k!) x^k
    """
    if n < 0:
        raise ValueError(f"negative Laguerre degree {n}")
    param = to_scalar(param)
    coeffs = {}
    for k in range(n + 1):
        coeff = rising_factorial(param + k + 1, n - k) / (factorial(n - k) * factorial(k))
        coeffs[(k,)] = -coeff if k % 2 else coeff
    return SERIES_RING.from_dict(coeffs)


def negate_argument(poly):
    """P(x) -> P(−x)"""
    return SERIES_RING.from_dict({(k,): (-1) ** k * c for (k,), c in poly.terms()})


@dataclass(frozen=True)
class SeedSpec:
    kind: int
    degree: int
    alpha_offset: int = 0

    def __post_init__(self):
        if self.kind not in KIND_TAGS:
            raise ValueError(f"unknown seed kind {self.kind}")
        if self.degree < 0:
            raise ValueError(f"negative seed degree {self.degree}")

    @property
    def tag(self) -> Tag:
        return KIND_TAGS[self.kind]

    def polynomial(self, alpha):
        """The polynomial part: L^{a}_n(±x) or L^{−a}_n(±x) with a = α + offset"""
        a = to_scalar(alpha) + self.alpha_offset
        param = a if self.kind in (FIRST, SECOND) else -a
        poly = laguerre(self.degree, param)
        return negate_argument(poly) if self.kind in (SECOND, FOURTH) else poly

    def render(self) -> str:
        a = "α" if not self.alpha_offset else f"α{self.alpha_offset:+d}"
        return {
            FIRST: f"L_{self.degree}^{{{a}}}(x)",
            SECOND: f"e^x L_{self.degree}^{{{a}}}(-x)",
            THIRD: f"x^{{-{a}}} L_{self.degree}^{{-{a}}}(x)",
            FOURTH: f"e^x x^{{-{a}}} L_{self.degree}^{{-{a}}}(-x)",
        }[self.kind]


def seed(spec: SeedSpec, alpha) -> QuasiRationalSeries:
    """The seed as an exact quasi-rational function on the parameter α + offset"""
    base = to_scalar(alpha) + spec.alpha_offset
    return QuasiRationalSeries.monomial(
        base, LaurentSeries.from_poly(spec.polynomial(alpha)), spec.tag
    )


def kummer_series(upper: Scalar, lower: Scalar, trunc: int) -> LaurentSeries:
    """
    M(upper, lower, x) = Σ upper^{(k)} / (lower^{(k)} k!) x^k, known below x^trunc.
    The series is exact when it terminates inside the window.
    """
    if trunc < 1:
        raise ValueError(f"truncation order {trunc} leaves no coefficient")
    coeffs = {0: ONE}
    current = ONE
    for k in range(trunc - 1):
        numerator = scalar_add(upper, k)
        if not numerator:
            return LaurentSeries(coeffs)
        denominator = scalar_add(lower, k)
        if not denominator:
            raise ParameterPoleError(
                f"M({render_scalar(upper)}, {render_scalar(lower)}, x) hits a pole at x^{k + 1}",
                step="kummer_series",
                alpha=render_scalar(lower),
            )
        current = scalar_div(scalar_mul(current, numerator), scalar_mul(denominator, k + 1))
        coeffs[k + 1] = current
    # a terminating series is exact even when it ends right at the window
    if not scalar_add(upper, trunc - 1):
        return LaurentSeries(coeffs)
    return LaurentSeries(coeffs, trunc)


def solution_h(alpha_expr, lambda_expr, trunc: int | None = None) -> QuasiRationalSeries:
    """h^a(x, λ) = M(−λ, a+1, x)"""
    a, lam = to_scalar(alpha_expr), to_scalar(lambda_expr)
    trunc = trunc if trunc is not None else config.ORACLE_TRUNCATION_GUARD
    return QuasiRationalSeries.monomial(a, kummer_series(-lam, a + 1, trunc))


def solution_htilde(alpha_expr, lambda_expr, trunc: int | None = None) -> QuasiRationalSeries:
    """h̃^a(x, λ) = x^{−a} M(−λ−a, 1−a, x)"""
    a, lam = to_scalar(alpha_expr), to_scalar(lambda_expr)
    trunc = trunc if trunc is not None else config.ORACLE_TRUNCATION_GUARD
    return QuasiRationalSeries.monomial(a, kummer_series(-lam - a, 1 - a, trunc), (-1, 0))
