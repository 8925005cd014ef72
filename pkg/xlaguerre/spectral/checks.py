"""
Numeric checks on the exceptional operator at a rational α: eigenvalues of the extension 𝓛τ as
level curves of M∞, orthogonality of the exceptional polynomials, and sampled M∞ for plotting.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np
from numpy.polynomial import Polynomial
from scipy.integrate import quad

from xlaguerre import config
from xlaguerre.exact.scalars import to_fraction, to_scalar
from xlaguerre.maya import DiagramPair
from xlaguerre.oracle import (
    exceptional_polynomials,
    omega_plain,
    to_rational_poly,
    zero_free_on_halfline,
)
from xlaguerre.spectral.numerics import NumericWeylFunction, sample, solve_level
from xlaguerre.spectral.operator import m_infinity, operator_data
from xlaguerre.utils.errors import InadmissibleError, ParameterDomainError, QuadratureError
from xlaguerre.utils.timer import Timer

log = logging.getLogger("xlaguerre")


@dataclass(frozen=True)
class LevelSolution:
    lam: float
    residual: float


def level_solutions(
    pair: DiagramPair, alpha_value, tau: float, window: tuple[float, float]
) -> list[LevelSolution]:
    """
    Eigenvalues of 𝓛τ inside the window, i.e. solutions of M∞(λ) = τ with M∞ normalized to
    increase between its poles, and |M∞(λ) − τ| at each of them
    """
    value = to_fraction(alpha_value)
    lo, hi = window
    weyl = NumericWeylFunction(m_infinity(pair, value), value)
    weyl.normalize_sign(lo, hi)
    roots = solve_level(weyl, float(tau), lo, hi)
    log.debug(f"{len(roots)} eigenvalue(s) of L_{tau} in [{lo}, {hi}]")
    return [LevelSolution(root, abs(weyl(root) - float(tau))) for root in roots]


def eigenvalues_tau_numeric(
    pair: DiagramPair, alpha_value, tau: float, window: tuple[float, float]
) -> list[float]:
    return [solution.lam for solution in level_solutions(pair, alpha_value, tau, window)]


def _to_numpy(poly) -> Polynomial:
    rational = to_rational_poly(poly)
    degree = rational.degree()
    coeffs = [0.0] * (max(degree, 0) + 1)
    for (k,), c in rational.terms():
        coeffs[k] = float(Fraction(int(c.numerator), int(c.denominator)))
    return Polynomial(coeffs)


def _integrate(integrand, bold: float, epsabs: float = 0.0) -> float:
    """∫₀^∞ x^𝛂 f(x) dx, with the algebraic weight of quad taking care of x = 0"""
    total = 0.0
    for result in (
        quad(
            integrand,
            0,
            1,
            weight="alg",
            wvar=(bold, 0),
            epsabs=epsabs,
            epsrel=config.QUADRATURE_EPSREL,
            limit=config.QUADRATURE_LIMIT,
            full_output=1,
        ),
        quad(
            lambda x: x**bold * integrand(x),
            1,
            np.inf,
            epsabs=epsabs,
            epsrel=config.QUADRATURE_EPSREL,
            limit=config.QUADRATURE_LIMIT,
            full_output=1,
        ),
    ):
        # quad appends a message when ier > 0
        if len(result) > 3:
            raise QuadratureError(str(result[3]), step="orthogonality_check")
        total += result[0]
    return total


def orthogonality_check(pair: DiagramPair, alpha_value, count: int) -> float:
    """
    Largest |⟨p_i, p_j⟩| / √(⟨p_i, p_i⟩⟨p_j, p_j⟩) over the first ``count`` exceptional
    polynomials, for the weight x^𝛂 e^{−x} / Ω(x)²
    """
    value = to_fraction(alpha_value)
    data = operator_data(pair, value)
    if not data.admissible:
        raise InadmissibleError(
            f"μ = {data.shifts.first.mu} is not even",
            step="orthogonality_check",
            diagram=str(pair),
            alpha=str(value),
        )
    bold = to_fraction(data.bold_alpha)
    if not zero_free_on_halfline(pair, value):
        raise ParameterDomainError(
            "Ω has a zero on [0, ∞): the weight is not integrable",
            step="orthogonality_check",
            diagram=str(pair),
            alpha=str(value),
        )
    timer = Timer("orthogonality", diagram=str(pair))
    alpha = to_scalar(value)
    _, omega_series = omega_plain(pair, alpha).single_term()
    omega = _to_numpy(omega_series.to_poly())
    polys = [(n, _to_numpy(p)) for n, p in exceptional_polynomials(pair, alpha, count)]
    timer.mark("polynomials")

    def inner(p: Polynomial, q: Polynomial, epsabs: float = 0.0) -> float:
        return _integrate(
            lambda x: p(x) * q(x) * np.exp(-x) / omega(x) ** 2, float(bold), epsabs
        )

    # unit norms; off-diagonal products then get an absolute tolerance
    polys = [(n, p / np.sqrt(inner(p, p))) for n, p in polys]
    worst = 0.0
    for (n, p), (k, q) in combinations(polys, 2):
        ratio = abs(inner(p, q, config.QUADRATURE_EPSABS))
        log.debug(f"⟨L_{n}, L_{k}⟩ normalized: {ratio:.3e}")
        worst = max(worst, float(ratio))
    timer.stop()
    return worst


def plot_data(
    pair: DiagramPair, alpha_value, window: tuple[float, float], grid: int
) -> list[tuple[float, float]]:
    """(λ, M∞(λ)) rows on a regular grid, NaN next to poles"""
    value = to_fraction(alpha_value)
    lo, hi = window
    return sample(m_infinity(pair, value), value, lo, hi, grid)
