import csv
import json
import logging
import math
import sys
from collections import Counter
from contextlib import contextmanager
from fractions import Fraction

from minicli import cli, run, wrap
from progressist import ProgressBar

from xlaguerre.exact.scalars import ALPHA, render_scalar, to_fraction, to_scalar
from xlaguerre.logger import setup_logging
from xlaguerre.maya import DiagramPair, parse_diagram, type_one_pair
from xlaguerre.pipeline import (
    BOTH,
    admissible_pairs,
    analyze as analyze_pair,
    oracle_sweep,
    polynomial_listing,
)
from xlaguerre.schemas import AnalysisReportSchema
from xlaguerre.spectral import (
    CONVENTIONS,
    INFINITY,
    level_solutions,
    plot_data,
    spectrum,
)
from xlaguerre.spectral.operator import TAU_INFINITY
from xlaguerre.utils.errors import (
    ConventionError,
    ConvergenceError,
    DiagramParseError,
    DiagramValidationError,
    InadmissibleError,
    OracleMismatch,
    ParameterDomainError,
    PoleError,
    QuadratureError,
)
from xlaguerre.utils.timer import Timer

context = {}
log = setup_logging()

EXIT_CODES = {
    OracleMismatch: 1,
    InadmissibleError: 2,
    DiagramParseError: 2,
    DiagramValidationError: 2,
    ParameterDomainError: 3,
    # numeric runs that cannot be completed on the requested window
    ConventionError: 4,
    PoleError: 4,
    ConvergenceError: 4,
    QuadratureError: 4,
}
OUTPUTS = ("text", "json")


@contextmanager
def exit_codes():
    """Log library errors on stderr and exit with their code"""
    try:
        yield
    except tuple(EXIT_CODES) as e:
        log.error(f"{type(e).__name__}: {e.message}")
        sys.exit(EXIT_CODES[type(e)])


def _quiet(quiet: bool) -> None:
    if quiet:
        log.setLevel(logging.ERROR)


def _pair(m1: str, m2: str, type_one: int) -> DiagramPair:
    if type_one:
        return type_one_pair(type_one)
    return DiagramPair(parse_diagram(m1), parse_diagram(m2))


def _alpha(alpha_value: str | None, type_one: int = 0):
    """The parameter of the pair; the Type I operator at α is the pair (∅|∅), (∅|m) at α − 1"""
    alpha = to_scalar(alpha_value) if alpha_value is not None else ALPHA
    return alpha - 1 if type_one else alpha


def _numeric_alpha(alpha_value: str | None, type_one: int = 0) -> Fraction:
    if alpha_value is None:
        raise ParameterDomainError("a numeric --alpha-value is required", step="cli")
    return to_fraction(_alpha(alpha_value, type_one))


def _window(window: str) -> tuple[float, float]:
    try:
        lo, hi = (float(to_fraction(part)) for part in window.split(","))
    except ValueError as e:
        raise ParameterDomainError(f"window '{window}' is not 'lo,hi'", step="cli") from e
    return lo, hi


def _check_out(out: str) -> None:
    if out not in OUTPUTS:
        raise ParameterDomainError(f"--out must be one of {', '.join(OUTPUTS)}", step="cli")


def render_report(report: dict) -> str:
    inputs = report["inputs"]
    lines = [
        f"M₁ = {inputs['m1']}, M₂ = {inputs['m2']}, α = {inputs['alpha']}",
        "",
        "shifts:",
    ]
    lines += [f"  {key} = {value}" for key, value in report["shifts"].items()]
    lines += [
        "",
        f"𝛂 = {report['bold_alpha']}",
        f"admissible: {'yes' if report['admissible'] else 'no'}",
        f"W(x) = {report['weight']}",
        "",
        f"𝔠 = {report['frak_c']['rendered']}",
        f"𝔇 = {report['frak_d']['rendered']}",
        f"M∞(λ) = {report['m_infinity']['rendered']}",
        f"M₀(λ) = {report['m_zero']['rendered']}",
        "",
    ]
    for convention, spectra in report["spectra"].items():
        lines.append(f"spectra ({convention} convention):")
        lines.append(f"  σ(L∞) = {spectra['infinity']['rendered']}")
        lines.append(f"  σ(L₀) = {spectra['zero']['rendered']}")
    if report["convention_diff"]:
        lines.append("convention differences (paper only / strict only):")
        for extension, diff in report["convention_diff"].items():
            paper_only = ", ".join(diff["paper_only"]) or "∅"
            strict_only = ", ".join(diff["strict_only"]) or "∅"
            lines.append(f"  {extension}: {paper_only} / {strict_only}")
    lines.append(f"σ(L₀) ∩ σ(L∞) = ∅: {'yes' if report['disjoint'] else 'no'}")
    if report["friedrichs"]:
        lines.append(f"Friedrichs extension: L_{report['friedrichs']}")
    classification = report["classification"]
    lines += ["", f"x = 0: {classification['zero']}, x = ∞: {classification['infinity']}"]
    if classification["deficiency"]:
        lines.append(f"deficiency indices: {tuple(classification['deficiency'])}")
    lines += [f"  {value}" for value in report["boundary"].values()]
    if report["warnings"]:
        lines += ["", "warnings:"] + [f"  - {warning}" for warning in report["warnings"]]
    return "\n".join(lines)


@cli
def analyze(
    m1: str = "(|)",
    m2: str = "(|)",
    alpha_value: str | None = None,
    convention: str | None = None,
    out: str = "text",
    type_one: int = 0,
    quiet: bool = False,
):
    """Weight, m-functions and spectra of the exceptional Laguerre operator of a diagram pair

    :m1: first Maya diagram, as "(excluded|included)", eg "(|3,2)"
    :m2: second Maya diagram, eg "(1,0|)"
    :alpha_value: rational value of α as "p/q", symbolic α when omitted
    :convention: pole convention, paper, strict or both (default from config)
    :out: output format, text or json
    :type_one: use the Type I pair of this degree instead of --m1/--m2, at parameter α − 1
    :quiet: ignore logs except for errors
    """
    _quiet(quiet)
    with exit_codes():
        _check_out(out)
        if convention and convention not in CONVENTIONS + (BOTH,):
            raise ParameterDomainError(f"unknown convention '{convention}'", step="cli")
        pair = _pair(m1, m2, type_one)
        report = analyze_pair(pair, _alpha(alpha_value, type_one), convention).as_dict()
        if out == "json":
            print(AnalysisReportSchema().to_json(report))
        else:
            print(render_report(report))


@cli(name="oracle-check")
def oracle_check(
    max_index: int = 3,
    max_seeds: int = 2,
    trunc: int = 0,
    alpha_value: str | None = None,
    quiet: bool = False,
):
    """Compare the closed-form constants and evaluations with brute-force Wronskians

    :max_index: enumerate the diagrams whose indices are all below this bound
    :max_seeds: skip the pairs with more seed functions than this, 0 for no cap
    :trunc: initial series truncation, automatic when 0
    :alpha_value: run at a rational α instead of symbolically
    :quiet: ignore logs except for errors and hide the progress bar
    """
    _quiet(quiet)

    def iter_with_progressbar_or_quiet(rows, quiet):
        if quiet:
            for row in rows:
                yield row
        else:
            bar = ProgressBar(total=len(rows))
            for row in bar.iter(rows):
                yield row

    with exit_codes():
        alpha = _alpha(alpha_value)
        pairs = admissible_pairs(max_index, max_seeds)
        log.info(f"Checking {len(pairs)} admissible pair(s) at α = {render_scalar(alpha)}...")
        passed: Counter = Counter()
        for _, comparisons in oracle_sweep(
            iter_with_progressbar_or_quiet(pairs, quiet), alpha, trunc or None
        ):
            passed.update(c.kind for c in comparisons)
        print(f"{'kind':<16}{'passed':>8}")
        for kind, count in passed.items():
            print(f"{kind:<16}{count:>8}")
        print(f"{'pairs':<16}{len(pairs):>8}")


@cli(name="spectrum")
def spectrum_cli(
    m1: str = "(|)",
    m2: str = "(|)",
    alpha_value: str | None = None,
    tau: str = "0",
    window: str = "-2,6",
    convention: str | None = None,
    out: str = "text",
    type_one: int = 0,
    quiet: bool = False,
):
    """Eigenvalues of the extension L_τ, i.e. the solutions of M∞(λ) = τ inside a window

    :m1: first Maya diagram
    :m2: second Maya diagram
    :alpha_value: rational value of α as "p/q" (required)
    :tau: boundary parameter, a rational or "∞" for the symbolic spectrum of L∞
    :window: "lo,hi" search window; its ends must not be poles
    :convention: pole convention used with τ = ∞
    :out: output format, text or json
    :type_one: use the Type I pair of this degree, at parameter α − 1
    :quiet: ignore logs except for errors
    """
    _quiet(quiet)
    with exit_codes():
        _check_out(out)
        pair = _pair(m1, m2, type_one)
        alpha = _numeric_alpha(alpha_value, type_one)
        if tau in (TAU_INFINITY, "inf", "infinity"):
            result = spectrum(pair, alpha, INFINITY, convention)
            if out == "json":
                print(json.dumps(result.as_dict(), ensure_ascii=False, sort_keys=True))
            else:
                print(f"σ(L∞) = {result}")
            return
        lo, hi = _window(window)
        solutions = level_solutions(pair, alpha, float(to_fraction(tau)), (lo, hi))
        if out == "json":
            rows = [{"lambda": s.lam, "residual": s.residual} for s in solutions]
            print(json.dumps({"tau": tau, "window": [lo, hi], "eigenvalues": rows}))
            return
        for solution in solutions:
            print(f"{solution.lam:.15g}\t{solution.residual:.3e}")


@cli(name="plot-data")
def plot_data_cli(
    m1: str = "(|)",
    m2: str = "(|)",
    alpha_value: str | None = None,
    window: str = "-3,3",
    grid: int = 601,
    type_one: int = 0,
    quiet: bool = False,
):
    """CSV samples of M∞(λ) on a regular grid, NaN next to the poles

    :m1: first Maya diagram
    :m2: second Maya diagram
    :alpha_value: rational value of α as "p/q" (required)
    :window: "lo,hi" sampled interval
    :grid: number of grid points
    :type_one: use the Type I pair of this degree, at parameter α − 1
    :quiet: ignore logs except for errors
    """
    _quiet(quiet)
    with exit_codes():
        pair = _pair(m1, m2, type_one)
        alpha = _numeric_alpha(alpha_value, type_one)
        rows = plot_data(pair, alpha, _window(window), grid)
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["lambda", "m_infinity"])
        for lam, value in rows:
            writer.writerow([repr(lam), "NaN" if math.isnan(value) else repr(value)])


@cli
def polys(
    m1: str = "(|)",
    m2: str = "(|)",
    alpha_value: str | None = None,
    count: int = 3,
    out: str = "text",
    type_one: int = 0,
    quiet: bool = False,
):
    """The first exceptional Laguerre polynomials of a diagram pair, deleted degrees skipped

    :m1: first Maya diagram
    :m2: second Maya diagram
    :alpha_value: rational value of α as "p/q", symbolic α when omitted
    :count: number of polynomials
    :out: output format, text or json
    :type_one: use the Type I pair of this degree, at parameter α − 1
    :quiet: ignore logs except for errors
    """
    _quiet(quiet)
    with exit_codes():
        _check_out(out)
        pair = _pair(m1, m2, type_one)
        listing = polynomial_listing(pair, _alpha(alpha_value, type_one), count)
        if out == "json":
            print(json.dumps(listing, ensure_ascii=False))
            return
        for item in listing:
            terms = " + ".join(
                f"({c})·x^{k}" for k, c in enumerate(item["coefficients"]) if c != "0"
            )
            print(f"n={item['n']} (degree {item['degree']}): {terms}")


@wrap
def cli_wrapper():
    context["timer"] = Timer("cli")
    yield
    context["timer"].stop()


if __name__ == "__main__":
    run()
