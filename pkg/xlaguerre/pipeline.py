"""
End-to-end runs used by the command line: the analysis report of one diagram pair, and the
comparison of the closed forms with the brute-force Wronskians.
"""

import logging
from dataclasses import asdict, dataclass, field
from typing import Iterable

from xlaguerre import config
from xlaguerre.evalzero import (
    eval_first_kind,
    eval_plain,
    eval_plain_conjugate,
    eval_second_kind,
)
from xlaguerre.exact.scalars import ALPHA, LAMBDA, Scalar, render_scalar, to_scalar
from xlaguerre.exact.scalars import ZERO as ZERO_SCALAR
from xlaguerre.maya import (
    DiagramPair,
    canonical_shift,
    enumerate_pairs,
    is_even,
    shift,
    to_partition,
)
from xlaguerre.oracle import (
    exceptional_polynomials,
    omega_h_at_zero,
    omega_htilde_at_zero,
    omega_plain_at_zero,
)
from xlaguerre.shifts import shift_report
from xlaguerre.spectral import (
    CONVENTIONS,
    EXTENSIONS,
    INFINITY,
    ZERO,
    boundary_data,
    disjointness_check,
    identify_friedrichs,
    normalization,
    operator_data,
    spectrum,
    spectrum_diff,
    weight,
)
from xlaguerre.utils.errors import ConventionError, OracleMismatch

log = logging.getLogger("xlaguerre")

BOTH = "both"


@dataclass
class AnalysisReport:
    inputs: dict
    shifts: dict
    bold_alpha: str
    admissible: bool
    weight: str
    frak_c: dict
    frak_d: dict
    m_infinity: dict
    m_zero: dict
    spectra: dict
    disjoint: bool
    boundary: dict
    classification: dict
    convention_diff: dict | None = None
    friedrichs: str | None = None
    warnings: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return asdict(self)


def analyze(pair: DiagramPair, alpha=ALPHA, convention: str | None = None) -> AnalysisReport:
    """
    Weight, normalization, m-functions and both spectra of the operator of ``pair``.
    ``convention`` is "paper", "strict" or "both"; "both" adds the difference of the two.
    """
    convention = convention or config.POLE_CONVENTION
    if convention not in CONVENTIONS + (BOTH,):
        raise ValueError(f"unknown pole convention '{convention}'")
    conventions = CONVENTIONS if convention == BOTH else (convention,)
    data = operator_data(pair, alpha)
    log.info(f"analyzing {pair} at α = {render_scalar(data.alpha)}")
    w = weight(pair, data.alpha)
    norm = normalization(pair, data.alpha)
    m_inf = norm.frak_d / norm.frak_c
    m_zero = -(norm.frak_c / norm.frak_d)

    spectra = {
        name: {
            extension: spectrum(pair, data.alpha, extension, name).as_dict()
            for extension in EXTENSIONS
        }
        for name in conventions
    }
    primary = conventions[0]
    s_zero = spectrum(pair, data.alpha, ZERO, primary)
    s_inf = spectrum(pair, data.alpha, INFINITY, primary)
    log.info(f"σ(L∞) = {s_inf}, σ(L₀) = {s_zero}")

    warnings = data.warnings()
    if not data.is_numeric:
        warnings.append("spectra assume a generic α, i.e. α ∉ ℤ")
    friedrichs = None
    if data.is_numeric:
        try:
            friedrichs = identify_friedrichs(s_zero, s_inf, data.alpha_value)
        except ConventionError as e:
            warnings.append(f"no Friedrichs extension identified: {e.message}")
    diff = None
    if convention == BOTH:
        diff = {
            extension: spectrum_diff(pair, data.alpha, extension).as_dict()
            for extension in EXTENSIONS
        }
    for warning in warnings:
        log.warning(warning)

    return AnalysisReport(
        inputs={
            "m1": pair.m1.render(),
            "m2": pair.m2.render(),
            "alpha": render_scalar(data.alpha),
            "convention": convention,
        },
        shifts=data.shifts.as_dict(),
        bold_alpha=render_scalar(data.bold_alpha),
        admissible=data.admissible,
        weight=w.render(),
        frak_c=norm.frak_c.as_dict(),
        frak_d=norm.frak_d.as_dict(),
        m_infinity=m_inf.as_dict(),
        m_zero=m_zero.as_dict(),
        spectra=spectra,
        disjoint=disjointness_check(s_zero, s_inf),
        boundary=boundary_data(pair, data.alpha).as_dict(),
        classification=data.classification().as_dict(),
        convention_diff=diff,
        friedrichs=friedrichs,
        warnings=warnings,
    )


def _equal_up_to_sign(a: Scalar, b: Scalar) -> bool:
    return a == b or a == -b


@dataclass(frozen=True)
class OracleComparison:
    pair: DiagramPair
    kind: str
    closed_form: str
    oracle: str
    ok: bool


def compare_with_oracle(
    pair: DiagramPair, alpha=ALPHA, trunc: int | None = None
) -> list[OracleComparison]:
    """
    Closed-form constant × closed-form evaluation against the brute-force Wronskian at x = 0,
    for the first kind, the second kind and the plain polynomial
    """
    a = to_scalar(alpha)
    report = shift_report(pair, a)
    first, second = report.first, report.second
    checks = [
        (
            "first",
            report.C
            * eval_first_kind(first.mu, first.nu, report.alpha_prime, LAMBDA + first.t1),
            omega_h_at_zero(pair, a, LAMBDA, trunc),
        ),
        (
            "second",
            report.D
            * eval_second_kind(second.mup, second.nup, report.alpha_second, LAMBDA + second.t1p),
            omega_htilde_at_zero(pair, a, LAMBDA, trunc),
        ),
    ]
    plain = omega_plain_at_zero(pair, a)
    checks.append(("plain", first.C3 * eval_plain(first.mu, first.nu, report.alpha_prime), plain))
    checks.append(
        (
            "plain-conjugate",
            second.D3 * eval_plain_conjugate(second.mup, second.nup, report.alpha_second),
            plain,
        )
    )
    return [
        OracleComparison(
            pair,
            kind,
            render_scalar(closed),
            render_scalar(oracle),
            _equal_up_to_sign(closed, oracle),
        )
        for kind, closed, oracle in checks
    ]


def is_admissible(pair: DiagramPair) -> bool:
    """μ even, read off the canonical form of M₁"""
    return is_even(to_partition(shift(pair.m1, canonical_shift(pair.m1))))


def admissible_pairs(max_index: int, max_seeds: int | None = None) -> list[DiagramPair]:
    """Admissible pairs with every index below ``max_index`` and at most ``max_seeds`` seeds

    A ``max_seeds`` of 0 or None puts no cap on the seeds.
    """
    return [
        pair
        for pair in enumerate_pairs(max_index)
        if (not max_seeds or pair.r <= max_seeds) and is_admissible(pair)
    ]


def oracle_sweep(pairs: Iterable[DiagramPair], alpha=ALPHA, trunc: int | None = None):
    """Yield the comparisons pair by pair; raise OracleMismatch on the first failure"""
    for pair in pairs:
        comparisons = compare_with_oracle(pair, alpha, trunc)
        for comparison in comparisons:
            if not comparison.ok:
                raise OracleMismatch(
                    f"{comparison.kind}: closed form {comparison.closed_form} "
                    f"≠ ± oracle {comparison.oracle}",
                    step="oracle_sweep",
                    diagram=str(pair),
                    alpha=render_scalar(to_scalar(alpha)),
                )
        yield pair, comparisons


def polynomial_listing(pair: DiagramPair, alpha, count: int) -> list[dict]:
    """The first ``count`` non-deleted exceptional polynomials, coefficients by ascending power"""
    listing = []
    for n, poly in exceptional_polynomials(pair, to_scalar(alpha), count):
        degree = poly.degree()
        coeffs = [render_scalar(poly.get((k,), ZERO_SCALAR)) for k in range(degree + 1)]
        listing.append({"n": n, "degree": degree, "coefficients": coeffs})
    return listing
