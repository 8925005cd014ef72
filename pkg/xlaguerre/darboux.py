"""
One-step Darboux transformation of a second-order expression ℓ[y] = p y″ + q y′ + r y.

With a quasi-rational eigenfunction φ of ℓ and a rational b, the expression factors as
ℓ = B∘A + λ0 with A[y] = b(y′ − w y), B[z] = b̂(z′ − ŵ z), where w = φ′/φ, b̂ = p/b and
ŵ = −w − q/p + b′/b. The partner 𝓛 = A∘B + λ0 has coefficients p, 𝒬 and ℛ + λ0.

All coefficients are rational functions of x over QQ(α, λ).
"""

import logging
from dataclasses import dataclass
from functools import cached_property

from sympy.polys.domains import QQ
from sympy.polys.fields import FracElement, field

from xlaguerre.exact.scalars import ALPHA, Scalar, to_scalar
from xlaguerre.seeds import SECOND, SeedSpec, laguerre, negate_argument
from xlaguerre.utils.errors import InconsistentFactorization

log = logging.getLogger("xlaguerre")

XFIELD, XX, XALPHA, XLAM = field("x,alpha,lam", QQ)

Rational = FracElement


def lift(value) -> Rational:
    """Scalars and polynomials in x over QQ(α, λ) into QQ(x, α, λ)"""
    if isinstance(value, FracElement) and value.field == XFIELD:
        return value
    if isinstance(value, int):
        return XFIELD(value)
    return XFIELD.from_expr(value.as_expr())


def dx(value: Rational) -> Rational:
    return value.diff(XX)


def is_x_free(value: Rational) -> bool:
    return value.numer.degree(0) <= 0 and value.denom.degree(0) <= 0


def seed_log_derivative(spec: SeedSpec, alpha) -> Rational:
    """φ′/φ of a seed x^{j·a} e^{k·x} P(x): j·a/x + k + P′/P"""
    j, k = spec.tag
    a = lift(to_scalar(alpha) + spec.alpha_offset)
    poly = lift(spec.polynomial(alpha))
    return j * a / XX + k + dx(poly) / poly


@dataclass(frozen=True)
class PartnerCoefficients:
    p: Rational
    Q: Rational
    R: Rational
    lam0: Rational
    weight_log_derivative: Rational

    def apply(self, z: Rational) -> Rational:
        """𝓛[z] = p z″ + 𝒬 z′ + (ℛ + λ0) z"""
        return self.p * dx(dx(z)) + self.Q * dx(z) + (self.R + self.lam0) * z


@dataclass(frozen=True)
class OneStepFactorization:
    p: Rational
    q: Rational
    r: Rational
    seed: SeedSpec
    b: Rational
    alpha: Scalar = ALPHA

    def __post_init__(self):
        if not self.b:
            raise InconsistentFactorization("b vanishes identically", step="factorization")
        if not self.p:
            raise InconsistentFactorization("p vanishes identically", step="factorization")

    @cached_property
    def w(self) -> Rational:
        return seed_log_derivative(self.seed, self.alpha)

    @cached_property
    def b_hat(self) -> Rational:
        return self.p / self.b

    @cached_property
    def w_hat(self) -> Rational:
        return -self.w - self.q / self.p + dx(self.b) / self.b

    @cached_property
    def lam0(self) -> Rational:
        """ℓ[φ]/φ, which must not depend on x"""
        w = self.w
        value = self.r + self.p * (dx(w) + w**2) + self.q * w
        if not is_x_free(value):
            raise InconsistentFactorization(
                f"ℓ[φ]/φ = {value.as_expr()} depends on x: φ is not an eigenfunction",
                step="lam0",
            )
        return value

    def apply_ell(self, y: Rational) -> Rational:
        return self.p * dx(dx(y)) + self.q * dx(y) + self.r * y

    def apply_A(self, y: Rational) -> Rational:
        return self.b * (dx(y) - self.w * y)

    def apply_B(self, z: Rational) -> Rational:
        return self.b_hat * (dx(z) - self.w_hat * z)


def partner_operator(factorization: OneStepFactorization) -> PartnerCoefficients:
    """𝒬, ℛ (each computed two ways and compared) and the weight of the partner expression"""
    f = factorization
    p, q, b = f.p, f.q, f.b
    w, w_hat, b_hat = f.w, f.w_hat, f.b_hat

    Q = q + dx(p) - 2 * p * dx(b) / b
    Q_from_A_B = b * (dx(b_hat) - b_hat * (w_hat + w))
    if Q != Q_from_A_B:
        raise InconsistentFactorization(
            f"𝒬 = {Q.as_expr()} but A∘B gives {Q_from_A_B.as_expr()}", step="partner_operator"
        )

    R = -p * (dx(w_hat) + w_hat**2) - Q * w_hat
    R_from_A_B = b * (w * b_hat * w_hat - dx(b_hat) * w_hat - b_hat * dx(w_hat))
    if R != R_from_A_B:
        raise InconsistentFactorization(
            f"ℛ = {R.as_expr()} but A∘B gives {R_from_A_B.as_expr()}", step="partner_operator"
        )

    # the classical weight W solves (pW)′ = qW; the partner weight is P/b² with P = pW
    weight_log_derivative = q / p - 2 * dx(b) / b
    return PartnerCoefficients(
        p=p, Q=Q, R=R, lam0=f.lam0, weight_log_derivative=weight_log_derivative
    )


def laguerre_expression(alpha=ALPHA) -> tuple[Rational, Rational, Rational]:
    """p, q, r of ℓ^α[y] = −x y″ + (x − α − 1) y′"""
    a = lift(to_scalar(alpha))
    return -XX, XX - a - 1, XFIELD.zero


def type_one_factorization(m: int, alpha=ALPHA) -> OneStepFactorization:
    """−ℓ^α = B∘A + (α + m + 1) with φ = e^x L_m^α(−x) and b = L_m^α(−x)"""
    p, q, r = laguerre_expression(alpha)
    b = lift(negate_argument(laguerre(m, to_scalar(alpha))))
    return OneStepFactorization(
        p=-p, q=-q, r=-r, seed=SeedSpec(SECOND, m), b=b, alpha=to_scalar(alpha)
    )


def type_one_partner(m: int, alpha=ALPHA) -> PartnerCoefficients:
    """
    Closed form of the partner of ``type_one_factorization``:
    𝒬 = α + 2 − x − 2x b′/b, ℛ = −(α + 1)(1 + 2b′/b), weight x^{α+1} e^{−x} / b²
    """
    a = lift(to_scalar(alpha))
    b = lift(negate_argument(laguerre(m, to_scalar(alpha))))
    log_b = dx(b) / b
    return PartnerCoefficients(
        p=XX,
        Q=a + 2 - XX - 2 * XX * log_b,
        R=-(a + 1) * (1 + 2 * log_b),
        lam0=a + m + 1,
        weight_log_derivative=(a + 1) / XX - 1 - 2 * log_b,
    )


def check_factorization(factorization: OneStepFactorization, y: Rational) -> bool:
    """ℓ[y] = B[A[y]] + λ0·y"""
    f = factorization
    return f.apply_ell(y) == f.apply_B(f.apply_A(y)) + f.lam0 * y


def check_intertwining(factorization: OneStepFactorization, y: Rational) -> bool:
    """A[ℓ[y]] = 𝓛[A[y]]"""
    f = factorization
    partner = partner_operator(f)
    return f.apply_A(f.apply_ell(y)) == partner.apply(f.apply_A(y))
