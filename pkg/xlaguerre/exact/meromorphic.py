import logging
from collections import Counter
from dataclasses import dataclass, field, replace

from xlaguerre.exact.scalars import (
    LAMBDA,
    LAMBDA_POLY,
    ONE,
    SCALARS,
    AffinePoint,
    Scalar,
    is_lambda_free,
    render_scalar,
    to_scalar,
)
from xlaguerre.utils.errors import NonAffineFactor

log = logging.getLogger("xlaguerre")


@dataclass(frozen=True, order=True)
class GammaFactor:
    """Γ(base − λ), or Γ(base) when ``lam`` is False"""

    base: AffinePoint
    lam: bool = True

    def shift_lambda(self, t) -> "GammaFactor":
        """Γ(base − (λ + t)) = Γ((base − t) − λ)"""
        return replace(self, base=self.base.shifted(-t)) if self.lam else self

    def poles(self) -> AffinePoint | None:
        """First pole in λ; the others follow at unit steps"""
        return self.base if self.lam else None

    def render(self) -> str:
        if not self.lam:
            return f"Γ({self.base.render()})"
        if not self.base.q and not self.base.s:
            return "Γ(-λ)"
        return f"Γ({self.base.render()}-λ)"


def _sorted(items) -> tuple:
    return tuple(sorted(items))


def _cancel(num, den) -> tuple[tuple, tuple]:
    common = Counter(num) & Counter(den)
    return _sorted((Counter(num) - common).elements()), _sorted((Counter(den) - common).elements())


@dataclass(frozen=True)
class FactoredMeromorphic:
    """
    constant · ∏Γ(num) / ∏Γ(den) · ∏(λ − ρ) / ∏(λ − ρ′)

    ``constant`` is λ-free. When ``sign_suppressed`` is set, the global sign is unknown and
    comparisons are made up to sign.
    """

    constant: Scalar = ONE
    gamma_num: tuple[GammaFactor, ...] = field(default_factory=tuple)
    gamma_den: tuple[GammaFactor, ...] = field(default_factory=tuple)
    roots_num: tuple[AffinePoint, ...] = field(default_factory=tuple)
    roots_den: tuple[AffinePoint, ...] = field(default_factory=tuple)
    sign_suppressed: bool = False

    def __post_init__(self):
        if not self.constant:
            raise ZeroDivisionError("a factored meromorphic function cannot vanish identically")
        if not is_lambda_free(self.constant):
            raise NonAffineFactor(
                f"constant {render_scalar(self.constant)} depends on λ", step="meromorphic"
            )
        gamma_num, gamma_den = _cancel(self.gamma_num, self.gamma_den)
        roots_num, roots_den = _cancel(self.roots_num, self.roots_den)
        object.__setattr__(self, "gamma_num", gamma_num)
        object.__setattr__(self, "gamma_den", gamma_den)
        object.__setattr__(self, "roots_num", roots_num)
        object.__setattr__(self, "roots_den", roots_den)

    @classmethod
    def from_scalar(cls, value: Scalar, sign_suppressed: bool = False) -> "FactoredMeromorphic":
        """Split a rational function of (α, λ) into a λ-free constant and affine λ-roots"""
        if not value:
            raise ZeroDivisionError("cannot factor the zero function")
        constant = ONE
        roots: dict[str, list[AffinePoint]] = {"num": [], "den": []}
        for side, poly in (("num", value.numer), ("den", value.denom)):
            coeff, factors = poly.factor_list()
            part = SCALARS(coeff)
            for factor, multiplicity in factors:
                degree = factor.degree(LAMBDA_POLY)
                if degree <= 0:
                    part *= SCALARS.new(factor) ** multiplicity
                    continue
                if degree > 1:
                    raise NonAffineFactor(
                        f"factor {factor.as_expr()} is not affine in λ", step="from_scalar"
                    )
                slope = factor.coeff_wrt(LAMBDA_POLY, 1)
                if not slope.is_ground:
                    raise NonAffineFactor(
                        f"factor {factor.as_expr()} has an α-dependent λ coefficient",
                        step="from_scalar",
                    )
                offset = factor.coeff_wrt(LAMBDA_POLY, 0)
                # factor = slope·(λ − ρ)
                try:
                    root = AffinePoint.of(SCALARS.new(-offset) / SCALARS.new(slope))
                except ValueError as e:
                    raise NonAffineFactor(str(e), step="from_scalar") from e
                part *= SCALARS.new(slope) ** multiplicity
                roots[side].extend([root] * multiplicity)
            constant = constant * part if side == "num" else constant / part
        return cls(
            constant=constant,
            roots_num=tuple(roots["num"]),
            roots_den=tuple(roots["den"]),
            sign_suppressed=sign_suppressed,
        )

    @classmethod
    def gamma_ratio(
        cls, num: list[GammaFactor], den: list[GammaFactor], sign_suppressed: bool = False
    ) -> "FactoredMeromorphic":
        return cls(
            gamma_num=tuple(num), gamma_den=tuple(den), sign_suppressed=sign_suppressed
        )

    def rational_part(self) -> Scalar:
        """constant · ∏(λ − ρ) / ∏(λ − ρ′), the Gamma factors left out"""
        value = self.constant
        for root in self.roots_num:
            value *= LAMBDA - root.as_scalar()
        for root in self.roots_den:
            value /= LAMBDA - root.as_scalar()
        return value

    def __mul__(self, other) -> "FactoredMeromorphic":
        if not isinstance(other, FactoredMeromorphic):
            return replace(self, constant=self.constant * to_scalar(other))
        return meromorphic_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other: "FactoredMeromorphic") -> "FactoredMeromorphic":
        return meromorphic_div(self, other)

    def __neg__(self) -> "FactoredMeromorphic":
        return replace(self, constant=-self.constant)

    def reciprocal(self) -> "FactoredMeromorphic":
        return FactoredMeromorphic(
            constant=1 / self.constant,
            gamma_num=self.gamma_den,
            gamma_den=self.gamma_num,
            roots_num=self.roots_den,
            roots_den=self.roots_num,
            sign_suppressed=self.sign_suppressed,
        )

    def shift_lambda(self, t) -> "FactoredMeromorphic":
        """Substitute λ → λ + t"""
        return FactoredMeromorphic(
            constant=self.constant,
            gamma_num=tuple(g.shift_lambda(t) for g in self.gamma_num),
            gamma_den=tuple(g.shift_lambda(t) for g in self.gamma_den),
            roots_num=tuple(r.shifted(-t) for r in self.roots_num),
            roots_den=tuple(r.shifted(-t) for r in self.roots_den),
            sign_suppressed=self.sign_suppressed,
        )

    def same_shape(self, other: "FactoredMeromorphic") -> bool:
        """Equal Gamma and root multisets; constants may differ"""
        return (
            self.gamma_num == other.gamma_num
            and self.gamma_den == other.gamma_den
            and self.roots_num == other.roots_num
            and self.roots_den == other.roots_den
        )

    def equals_up_to_sign(self, other: "FactoredMeromorphic") -> bool:
        return self.same_shape(other) and self.constant in (other.constant, -other.constant)

    def same_lambda_part(self, other: "FactoredMeromorphic") -> bool:
        """Equal up to a λ-free factor: only λ-Gammas and roots are compared"""
        return (
            self.lambda_gammas() == other.lambda_gammas()
            and self.roots_num == other.roots_num
            and self.roots_den == other.roots_den
        )

    def lambda_gammas(self) -> tuple[list[GammaFactor], list[GammaFactor]]:
        return [g for g in self.gamma_num if g.lam], [g for g in self.gamma_den if g.lam]

    def render(self) -> str:
        sign = "±" if self.sign_suppressed else ""
        parts = [f"{sign}({render_scalar(self.constant)})"]
        if self.gamma_num or self.gamma_den:
            num = "·".join(g.render() for g in self.gamma_num) or "1"
            den = "·".join(g.render() for g in self.gamma_den)
            parts.append(f"{num}/{den}" if den else num)
        if self.roots_num or self.roots_den:
            num = "".join(_render_root(r) for r in self.roots_num) or "1"
            den = "".join(_render_root(r) for r in self.roots_den)
            parts.append(f"{num}/{den}" if den else num)
        return " · ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def as_dict(self) -> dict:
        return {
            "constant": render_scalar(self.constant),
            "gamma_num": [g.render() for g in self.gamma_num],
            "gamma_den": [g.render() for g in self.gamma_den],
            "roots_num": [r.render() for r in self.roots_num],
            "roots_den": [r.render() for r in self.roots_den],
            "sign_suppressed": self.sign_suppressed,
            "rendered": self.render(),
        }


def _render_root(root: AffinePoint) -> str:
    if not root.q and not root.s:
        return "(λ)"
    negated = root.negated()
    text = negated.render()
    return f"(λ{text})" if text.startswith("-") else f"(λ+{text})"


def meromorphic_mul(a: FactoredMeromorphic, b: FactoredMeromorphic) -> FactoredMeromorphic:
    return FactoredMeromorphic(
        constant=a.constant * b.constant,
        gamma_num=a.gamma_num + b.gamma_num,
        gamma_den=a.gamma_den + b.gamma_den,
        roots_num=a.roots_num + b.roots_num,
        roots_den=a.roots_den + b.roots_den,
        sign_suppressed=a.sign_suppressed or b.sign_suppressed,
    )


def meromorphic_div(a: FactoredMeromorphic, b: FactoredMeromorphic) -> FactoredMeromorphic:
    return meromorphic_mul(a, b.reciprocal())


def affine_lambda_roots(value: Scalar) -> list[AffinePoint]:
    """λ-roots of the numerator of a rational function, with multiplicity"""
    return list(FactoredMeromorphic.from_scalar(value).roots_num)
