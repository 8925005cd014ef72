"""
Spectra read off the poles of factored Weyl functions.

Points are grouped in classes differing by integers (same α coefficient, same fractional part).
Under the ``paper`` convention the order at ρ is the number of numerator Gammas with a pole at ρ,
plus the multiplicity of ρ among the denominator roots, minus its multiplicity among the
numerator roots. The ``strict`` convention also subtracts the denominator Gammas vanishing at ρ.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import chain

from xlaguerre.exact.meromorphic import FactoredMeromorphic
from xlaguerre.exact.scalars import AffinePoint
from xlaguerre.utils.errors import ConventionError

log = logging.getLogger("xlaguerre")

PAPER, STRICT = "paper", "strict"
CONVENTIONS = (PAPER, STRICT)

ZERO, INFINITY = "zero", "infinity"
EXTENSIONS = (ZERO, INFINITY)


@dataclass(frozen=True, order=True)
class Family:
    """{base + n : n ∈ ℕ₀ ∖ excluded}"""

    base: AffinePoint
    excluded: tuple[int, ...] = ()

    def __post_init__(self):
        base, excluded = self.base, sorted(set(self.excluded))
        if any(n < 0 for n in excluded):
            raise ValueError(f"negative excluded offset in {excluded}")
        while excluded and excluded[0] == 0:
            base = base.shifted(1)
            excluded = [n - 1 for n in excluded[1:]]
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "excluded", tuple(excluded))

    def contains(self, point: AffinePoint) -> bool:
        n = point.offset_from(self.base)
        return n is not None and n >= 0 and n not in self.excluded

    def values_in(self, lo: float, hi: float, alpha_value=None) -> list[float]:
        start = self.base.value(alpha_value)
        n = max(0, int(Fraction(lo) - start) - 1)
        values = []
        while start + n <= hi:
            if start + n >= lo and n not in self.excluded:
                values.append(float(start + n))
            n += 1
        return values

    def render(self) -> str:
        text = self.base.render()
        if not self.base.s and not self.base.q:
            term = "n"
        else:
            term = f"n{text}" if text.startswith("-") else f"n+{text}"
        domain = "ℕ₀"
        if self.excluded:
            domain += "∖{" + ",".join(str(n) for n in self.excluded) + "}"
        return f"{{{term}}}_{{n∈{domain}}}"

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class Spectrum:
    families: tuple[Family, ...] = field(default_factory=tuple)
    points: tuple[AffinePoint, ...] = field(default_factory=tuple)

    def __post_init__(self):
        families = tuple(sorted(set(self.families)))
        points = tuple(
            sorted(p for p in set(self.points) if not any(f.contains(p) for f in families))
        )
        object.__setattr__(self, "families", families)
        object.__setattr__(self, "points", points)

    def contains(self, point: AffinePoint) -> bool:
        return point in self.points or any(f.contains(point) for f in self.families)

    def is_empty(self) -> bool:
        return not self.families and not self.points

    def values_in(self, lo: float, hi: float, alpha_value=None) -> list[float]:
        values = {
            float(p.value(alpha_value)) for p in self.points if lo <= p.value(alpha_value) <= hi
        }
        for family in self.families:
            values.update(family.values_in(lo, hi, alpha_value))
        return sorted(values)

    def minimum(self, alpha_value=None) -> Fraction:
        candidates = [p.value(alpha_value) for p in self.points]
        candidates += [f.base.value(alpha_value) for f in self.families]
        if not candidates:
            raise ConventionError("an empty spectrum has no minimum", step="spectrum_minimum")
        return min(candidates)

    def render(self) -> str:
        parts = [f.render() for f in self.families]
        if self.points:
            parts.append("{" + ", ".join(p.render() for p in self.points) + "}")
        return " ∪ ".join(parts) or "∅"

    def __str__(self) -> str:
        return self.render()

    def as_dict(self) -> dict:
        return {
            "families": [
                {"base": f.base.render(), "excluded": list(f.excluded)} for f in self.families
            ],
            "points": [p.render() for p in self.points],
            "rendered": self.render(),
        }


def _at_or_after(point: AffinePoint, base: AffinePoint) -> bool:
    n = point.offset_from(base)
    return n is not None and n >= 0


def poles_of(function: FactoredMeromorphic, convention: str = PAPER) -> Spectrum:
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown pole convention '{convention}'")
    num_gammas, den_gammas = function.lambda_gammas()
    poles_from = [g.base for g in num_gammas]
    zeros_from = [g.base for g in den_gammas] if convention == STRICT else []
    roots_num, roots_den = list(function.roots_num), list(function.roots_den)

    def order(point: AffinePoint) -> int:
        value = sum(1 for base in poles_from if _at_or_after(point, base))
        value -= sum(1 for base in zeros_from if _at_or_after(point, base))
        return value + roots_den.count(point) - roots_num.count(point)

    classes = defaultdict(list)
    for point in chain(poles_from, zeros_from, roots_num, roots_den):
        classes[point.class_key()].append(point)

    families, points = [], []
    for key, special in classes.items():
        lo, hi = min(special), max(special)
        tail = sum(1 for b in poles_from if b.class_key() == key)
        tail -= sum(1 for b in zeros_from if b.class_key() == key)
        if tail > 0:
            start = min(b for b in poles_from if b.class_key() == key)
            for k in range(start.offset_from(lo)):
                if order(lo.shifted(k)) > 0:
                    points.append(lo.shifted(k))
            excluded = [
                k for k in range(hi.offset_from(start) + 1) if order(start.shifted(k)) <= 0
            ]
            families.append(Family(start, tuple(excluded)))
        else:
            for k in range(hi.offset_from(lo) + 1):
                if order(lo.shifted(k)) > 0:
                    points.append(lo.shifted(k))
    return Spectrum(tuple(families), tuple(points))


@dataclass(frozen=True)
class SpectrumDiff:
    paper_only: tuple[str, ...] = ()
    strict_only: tuple[str, ...] = ()

    @property
    def is_empty(self) -> bool:
        return not self.paper_only and not self.strict_only

    def as_dict(self) -> dict:
        return {"paper_only": list(self.paper_only), "strict_only": list(self.strict_only)}


def spectrum_difference(paper: Spectrum, strict: Spectrum) -> SpectrumDiff:
    """What lies in exactly one of the two spectra, families and points"""
    only: dict[str, list] = {PAPER: [], STRICT: []}
    candidates: set[AffinePoint] = set()
    for this, other, name in ((paper, strict, PAPER), (strict, paper, STRICT)):
        other_classes = {f.base.class_key() for f in other.families}
        for family in this.families:
            if family.base.class_key() not in other_classes:
                only[name].append(family)
                continue
            candidates.add(family.base)
            candidates.update(family.base.shifted(n) for n in family.excluded)
        candidates.update(this.points)
    for point in sorted(candidates):
        in_paper, in_strict = paper.contains(point), strict.contains(point)
        if in_paper and not in_strict:
            only[PAPER].append(point)
        elif in_strict and not in_paper:
            only[STRICT].append(point)
    return SpectrumDiff(
        paper_only=tuple(item.render() for item in only[PAPER]),
        strict_only=tuple(item.render() for item in only[STRICT]),
    )


def disjointness_check(s0: Spectrum, s_inf: Spectrum) -> bool:
    """True iff the two spectra share no point, for generic α"""
    classes = {f.base.class_key() for f in s0.families}
    if any(f.base.class_key() in classes for f in s_inf.families):
        return False
    if any(s_inf.contains(p) for p in s0.points):
        return False
    return not any(s0.contains(p) for p in s_inf.points)


def identify_friedrichs(s0: Spectrum, s_inf: Spectrum, alpha_value) -> str:
    """The extension with the greater lowest eigenvalue"""
    low_zero, low_infinity = s0.minimum(alpha_value), s_inf.minimum(alpha_value)
    if low_zero == low_infinity:
        raise ConventionError(
            f"both extensions start at {low_zero}",
            step="identify_friedrichs",
            alpha=str(alpha_value),
        )
    return INFINITY if low_infinity > low_zero else ZERO
