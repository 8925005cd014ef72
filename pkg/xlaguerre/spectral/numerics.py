"""
Floating point evaluation of factored meromorphic functions of λ, and the level-curve search
on them. Γ goes through mpmath; brackets are solved with scipy's brentq and polished with
mpmath.findroot.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np
from scipy.optimize import brentq

from xlaguerre import config
from xlaguerre.exact.meromorphic import FactoredMeromorphic, GammaFactor
from xlaguerre.exact.scalars import is_constant, substitute_alpha, to_fraction
from xlaguerre.spectral.spectra import STRICT, poles_of
from xlaguerre.utils.errors import ConventionError, ConvergenceError, PoleError

log = logging.getLogger("xlaguerre")

WORKING_DPS = 30


def _mpf(value) -> mpmath.mpf:
    if isinstance(value, Fraction):
        return mpmath.mpf(value.numerator) / value.denominator
    return mpmath.mpf(value)


def _is_pole(x: mpmath.mpf) -> bool:
    return x <= 0 and x == mpmath.floor(x)


def gamma_numeric(x) -> float:
    """Γ(x) for real x; mpmath takes care of the reflection for x < 1/2"""
    with mpmath.workdps(WORKING_DPS):
        arg = _mpf(x)
        if _is_pole(arg):
            raise PoleError(f"Γ has a pole at {x}", step="gamma_numeric")
        try:
            return float(mpmath.gamma(arg))
        except ValueError as e:
            raise PoleError(f"Γ has a pole at {x}", step="gamma_numeric") from e


def constant_value(value, alpha_value) -> Fraction:
    """A λ-free scalar at a numeric α"""
    if not is_constant(value):
        value = substitute_alpha(value, alpha_value)
    return to_fraction(value)


def _gamma_argument(factor: GammaFactor, lam: mpmath.mpf, alpha_value) -> mpmath.mpf:
    base = _mpf(factor.base.value(alpha_value))
    return base - lam if factor.lam else base


def evaluate_meromorphic(
    function: FactoredMeromorphic, lam, alpha_value=None
) -> mpmath.mpf:
    """Value at a real λ; the Gamma factors of the denominator go through 1/Γ"""
    with mpmath.workdps(WORKING_DPS):
        lam = _mpf(lam)
        value = _mpf(constant_value(function.constant, alpha_value))
        for factor in function.gamma_num:
            arg = _gamma_argument(factor, lam, alpha_value)
            if _is_pole(arg):
                raise PoleError(
                    f"{factor.render()} has a pole at λ={mpmath.nstr(lam, 15)}",
                    step="evaluate_meromorphic",
                )
            value *= mpmath.gamma(arg)
        for factor in function.gamma_den:
            value *= mpmath.rgamma(_gamma_argument(factor, lam, alpha_value))
        for root in function.roots_num:
            value *= lam - _mpf(root.value(alpha_value))
        for root in function.roots_den:
            delta = lam - _mpf(root.value(alpha_value))
            if not delta:
                raise PoleError(
                    f"λ={root.render()} is a root of the denominator", step="evaluate_meromorphic"
                )
            value /= delta
        return +value


@dataclass
class NumericWeylFunction:
    """
    A factored function of λ at a numeric α, with a sign chosen so that it increases between
    consecutive poles.
    """

    function: FactoredMeromorphic
    alpha_value: Fraction | None = None
    sign: int = 1

    def raw(self, lam) -> float:
        return float(evaluate_meromorphic(self.function, lam, self.alpha_value))

    def __call__(self, lam) -> float:
        return self.sign * self.raw(lam)

    def poles(self, lo: float, hi: float) -> list[float]:
        """True poles in [lo, hi], i.e. strict order counting"""
        spectrum = poles_of(self.function, STRICT)
        return spectrum.values_in(lo, hi, self.alpha_value)

    def brackets(self, lo: float, hi: float) -> list[tuple[float, float, bool, bool]]:
        """Pole-free intervals of [lo, hi]; flags tell whether each end sits at a pole"""
        poles = self.poles(lo, hi)
        edges = [(lo, lo in poles)] + [(p, True) for p in poles if lo < p < hi]
        edges.append((hi, hi in poles))
        return [
            (a, b, a_pole, b_pole)
            for (a, a_pole), (b, b_pole) in zip(edges, edges[1:])
            if b > a
        ]

    def normalize_sign(self, lo: float, hi: float) -> int:
        """Pick the sign making the function increasing on every bracket of [lo, hi]"""
        directions = set()
        for a, b, _, _ in self.brackets(lo, hi):
            samples = np.linspace(a, b, config.LEVEL_CURVE_SAMPLES + 2)[1:-1]
            values = np.array([self.raw(x) for x in samples])
            steps = np.sign(np.diff(values))
            steps = steps[steps != 0]
            if not len(steps):
                continue
            if not (np.all(steps > 0) or np.all(steps < 0)):
                raise ConventionError(
                    f"M is not monotone on ({a}, {b})", step="normalize_sign"
                )
            directions.add(int(steps[0]))
        if len(directions) > 1:
            raise ConventionError(
                "M increases on some brackets and decreases on others", step="normalize_sign"
            )
        self.sign = directions.pop() if directions else 1
        log.debug(f"level-curve sign normalized to {self.sign:+d}")
        return self.sign


def _inner_end(x: float, at_pole: bool, towards: float) -> float:
    if not at_pole:
        return x
    margin = config.LEVEL_CURVE_POLE_MARGIN * max(1.0, abs(x))
    return x + margin if towards > x else x - margin


def solve_level(weyl: NumericWeylFunction, tau: float, lo: float, hi: float) -> list[float]:
    """Every λ in [lo, hi] with weyl(λ) = τ; at most one per pole-free bracket"""
    if lo >= hi:
        return []
    for end in (lo, hi):
        if end in weyl.poles(end, end):
            raise PoleError(f"window end {end} sits on a pole", step="solve_level")

    def shifted(x):
        return weyl(x) - tau

    roots = []
    for a, b, a_pole, b_pole in weyl.brackets(lo, hi):
        left, right = _inner_end(a, a_pole, b), _inner_end(b, b_pole, a)
        f_left, f_right = shifted(left), shifted(right)
        if f_left == 0:
            roots.append(left)
            continue
        if f_left * f_right > 0:
            continue
        try:
            root = brentq(
                shifted,
                left,
                right,
                xtol=config.LEVEL_CURVE_XTOL,
                maxiter=config.LEVEL_CURVE_MAXITER,
            )
        except RuntimeError as e:
            raise ConvergenceError(str(e), step="solve_level") from e
        root = _polish(weyl, tau, root, left, right)
        residual = abs(weyl(root) - tau)
        if residual > config.RESIDUAL_TOLERANCE * (1 + abs(tau)):
            raise ConvergenceError(
                f"residual {residual:.3e} at λ={root} for τ={tau}", step="solve_level"
            )
        roots.append(root)
    return roots


def _polish(weyl: NumericWeylFunction, tau: float, root: float, left: float, right: float):
    try:
        polished = float(mpmath.findroot(lambda x: weyl(float(x)) - tau, root))
    except (ValueError, ZeroDivisionError):
        return root
    # the secant step may jump into another bracket
    if not left <= polished <= right:
        return root
    if abs(weyl(polished) - tau) <= abs(weyl(root) - tau):
        return polished
    return root


def sample(
    function: FactoredMeromorphic, alpha_value, lo: float, hi: float, grid: int
) -> list[tuple[float, float]]:
    """(λ, value) on a linspace grid, NaN within the exclusion radius of a pole"""
    if lo >= hi or grid < 1:
        return []
    weyl = NumericWeylFunction(function, alpha_value)
    poles = weyl.poles(lo - 1, hi + 1)
    radius = config.PLOT_EXCLUSION_RADIUS
    rows = []
    for lam in np.linspace(lo, hi, grid):
        lam = float(lam)
        if any(abs(lam - p) <= radius for p in poles):
            rows.append((lam, math.nan))
            continue
        try:
            rows.append((lam, weyl.raw(lam)))
        except PoleError:
            rows.append((lam, math.nan))
    return rows
