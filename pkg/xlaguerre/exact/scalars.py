"""
Exact scalars of the whole system.

Every constant, evaluation and series coefficient lives in the rational function field
QQ(alpha, lam). A numeric alpha is simply an alpha-free element of the same field, so the
symbolic and the numeric pipelines share one code path.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from sympy import Rational, SympifyError
from sympy.polys.domains import QQ, ZZ
from sympy.polys.fields import FracElement, field
from sympy.polys.polyerrors import HeuristicGCDFailed

from xlaguerre.utils.errors import ParameterDomainError

log = logging.getLogger("xlaguerre")

SCALARS, ALPHA, LAMBDA = field("alpha,lam", QQ)
POLYS = SCALARS.ring
ALPHA_POLY, LAMBDA_POLY = POLYS.gens

Scalar = FracElement

ONE = SCALARS.one
ZERO = SCALARS.zero

INTEGER_POLYS = POLYS.clone(domain=ZZ)


def _heuristic_cancel(numer, denom):
    return numer.cancel(denom)


def _prs_cancel(numer, denom):
    """The normalization of ``PolyElement.cancel``, with the dense gcd that falls back to PRS"""
    cq, f = numer.clear_denoms()
    cp, g = denom.clear_denoms()
    _, p, q = INTEGER_POLYS.dmp_inner_gcd(f.set_ring(INTEGER_POLYS), g.set_ring(INTEGER_POLYS))
    _, cp, cq = ZZ.cofactors(cp, cq)
    p = p.set_ring(POLYS).mul_ground(cp)
    q = q.set_ring(POLYS).mul_ground(cq)
    if q.LC < 0:
        p, q = -p, -q
    return p, q


def cancel(numer, denom) -> Scalar:
    """
    numer / denom over QQ[alpha, lam] in lowest terms, stored the way SCALARS stores it.

    The sparse gcd behind field arithmetic is heuristic only and gives up on some
    products; those are cancelled again through the dense gcd.
    """
    if not denom:
        raise ZeroDivisionError("scalar with a zero denominator")
    if not numer:
        return ZERO
    try:
        p, q = _heuristic_cancel(numer, denom)
    except HeuristicGCDFailed:
        log.debug("heuristic gcd gave up, cancelling through the PRS gcd")
        p, q = _prs_cancel(numer, denom)
    return SCALARS.raw_new(p, q)


def scalar_add(a, b) -> Scalar:
    a, b = to_scalar(a), to_scalar(b)
    return cancel(a.numer * b.denom + b.numer * a.denom, a.denom * b.denom)


def scalar_sub(a, b) -> Scalar:
    return scalar_add(a, -to_scalar(b))


def scalar_mul(a, b) -> Scalar:
    a, b = to_scalar(a), to_scalar(b)
    return cancel(a.numer * b.numer, a.denom * b.denom)


def scalar_div(a, b) -> Scalar:
    a, b = to_scalar(a), to_scalar(b)
    if not b:
        raise ZeroDivisionError("division by the zero scalar")
    return cancel(a.numer * b.denom, a.denom * b.numer)


def parse_rational(text: str):
    """Parse "p/q" (or an integer) into an exact QQ element"""
    try:
        value = Rational(str(text).strip())
    except (TypeError, ValueError, SympifyError) as e:
        raise ParameterDomainError(
            f"'{text}' is not a rational number", step="parse_rational"
        ) from e
    return QQ(int(value.p), int(value.q))


def to_scalar(value) -> Scalar:
    if isinstance(value, FracElement) and value.field == SCALARS:
        return value
    if isinstance(value, str):
        value = parse_rational(value)
    elif isinstance(value, Fraction):
        value = QQ(value.numerator, value.denominator)
    elif isinstance(value, Rational):
        value = QQ(int(value.p), int(value.q))
    return SCALARS(value)


def to_fraction(value) -> Fraction:
    """Convert an int, a "p/q" string, a QQ element or a constant scalar into a Fraction"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        value = parse_rational(value)
    elif isinstance(value, FracElement):
        value = ground(value)
    return Fraction(int(value.numerator), int(value.denominator))


def ground(value):
    """The QQ element of a constant scalar"""
    scalar = to_scalar(value)
    if not is_constant(scalar):
        raise ValueError(f"{render_scalar(scalar)} is not a constant")
    return scalar.numer.LC / scalar.denom.LC


def is_constant(value: Scalar) -> bool:
    return value.numer.is_ground and value.denom.is_ground


def is_lambda_free(value: Scalar) -> bool:
    return value.numer.degree(LAMBDA_POLY) <= 0 and value.denom.degree(LAMBDA_POLY) <= 0


def rising_factorial(base: Scalar, n: int) -> Scalar:
    """base (base+1) ... (base+n-1), the empty product for n=0"""
    if n < 0:
        raise ValueError(f"negative factorial length {n}")
    result = ONE
    for k in range(n):
        result = scalar_mul(result, scalar_add(base, k))
    return result


def falling_factorial(base: Scalar, n: int) -> Scalar:
    """base (base-1) ... (base-n+1), the empty product for n=0"""
    if n < 0:
        raise ValueError(f"negative factorial length {n}")
    result = ONE
    for k in range(n):
        result = scalar_mul(result, scalar_add(base, -k))
    return result


def product(factors: Iterable[Scalar]) -> Scalar:
    result = ONE
    for factor in factors:
        result = scalar_mul(result, factor)
    return result


def shift_lambda(value: Scalar, t: int) -> Scalar:
    """Substitute lam -> lam + t"""
    if not t:
        return value
    target = LAMBDA_POLY + t
    return cancel(
        value.numer.compose(LAMBDA_POLY, target), value.denom.compose(LAMBDA_POLY, target)
    )


def substitute_alpha(value: Scalar, alpha) -> Scalar:
    point = ground(alpha)
    return cancel(value.numer.subs(ALPHA_POLY, point), value.denom.subs(ALPHA_POLY, point))


def render_scalar(value: Scalar) -> str:
    return str(value.as_expr()).replace("alpha", "α").replace("lam", "λ")


@dataclass(frozen=True, order=True)
class AffinePoint:
    """The point q + s·α on the λ-line"""

    s: int
    q: Fraction

    @classmethod
    def of(cls, value: Scalar) -> "AffinePoint":
        """Read q + s·α off a lam-free scalar of degree at most one in alpha"""
        numer, denom = value.numer, value.denom
        if not denom.is_ground:
            raise ValueError(f"{render_scalar(value)} is not affine in α")
        q, s = QQ(0), QQ(0)
        for (i, j), coeff in numer.terms():
            if j or i > 1:
                raise ValueError(f"{render_scalar(value)} is not affine in α")
            if i:
                s = coeff / denom.LC
            else:
                q = coeff / denom.LC
        if s.denominator != 1:
            raise ValueError(f"{render_scalar(value)} has a non-integer α coefficient")
        return cls(s=int(s.numerator), q=to_fraction(q))

    def shifted(self, t) -> "AffinePoint":
        return AffinePoint(s=self.s, q=self.q + t)

    def negated(self) -> "AffinePoint":
        return AffinePoint(s=-self.s, q=-self.q)

    def as_scalar(self) -> Scalar:
        return to_scalar(self.q) + self.s * ALPHA

    def value(self, alpha_value=None) -> Fraction:
        if not self.s:
            return self.q
        if alpha_value is None:
            raise ParameterDomainError(
                f"a value of α is needed to evaluate {self.render()}", step="affine_value"
            )
        return self.q + self.s * to_fraction(alpha_value)

    def class_key(self) -> tuple[int, Fraction]:
        """Points in the same class differ by an integer"""
        return (self.s, self.q % 1)

    def offset_from(self, other: "AffinePoint") -> int | None:
        """n such that self = other + n, or None"""
        if self.s != other.s:
            return None
        delta = self.q - other.q
        return int(delta) if delta.denominator == 1 else None

    def render(self) -> str:
        if not self.s:
            return str(self.q)
        alpha = {1: "α", -1: "-α"}.get(self.s, f"{self.s}α")
        if not self.q:
            return alpha
        return f"{self.q}{alpha if alpha.startswith('-') else '+' + alpha}"

    def __str__(self) -> str:
        return self.render()
