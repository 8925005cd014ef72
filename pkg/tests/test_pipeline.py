from fractions import Fraction

import pytest

from xlaguerre.exact.scalars import ALPHA, to_scalar
from xlaguerre.maya import DiagramPair, parse_diagram, type_one_pair
from xlaguerre.pipeline import (
    BOTH,
    admissible_pairs,
    analyze,
    compare_with_oracle,
    is_admissible,
    oracle_sweep,
    polynomial_listing,
)
from xlaguerre.utils.errors import OracleMismatch

KINDS = ["first", "second", "plain", "plain-conjugate"]


@pytest.mark.parametrize(
    "pair_fixture",
    ["empty_pair", "type_one", pytest.param("worked_pair", marks=pytest.mark.slow)],
)
def test_compare_with_oracle(request, pair_fixture):
    comparisons = compare_with_oracle(request.getfixturevalue(pair_fixture))
    assert [c.kind for c in comparisons] == KINDS
    assert all(c.ok for c in comparisons), [c for c in comparisons if not c.ok]


def test_compare_with_oracle_numeric_alpha(type_one):
    assert all(c.ok for c in compare_with_oracle(type_one, Fraction(1, 3)))


def test_compare_with_oracle_heuristic_gcd_pair():
    # the sparse heuristic gcd gives up on the products of its series
    pair = DiagramPair(parse_diagram("(1,0|)"), parse_diagram("(|)"))
    comparisons = compare_with_oracle(pair)
    assert [c.kind for c in comparisons] == KINDS
    assert all(c.ok for c in comparisons), [c for c in comparisons if not c.ok]


def test_admissible_pairs(empty_pair, odd_pair, worked_pair):
    assert is_admissible(empty_pair)
    assert is_admissible(worked_pair)
    assert not is_admissible(odd_pair)
    pairs = admissible_pairs(1, 2)
    assert len(pairs) == 10
    assert empty_pair in pairs
    assert all(pair.r <= 1 for pair in admissible_pairs(2, 1))


def test_admissible_pairs_no_seed_cap(worked_pair):
    assert admissible_pairs(2, 0) == admissible_pairs(2)
    assert worked_pair in admissible_pairs(4, 0)
    assert worked_pair not in admissible_pairs(4, 2)
    assert max(pair.r for pair in admissible_pairs(3, 0)) > 2


def test_oracle_sweep_trivial():
    swept = list(oracle_sweep(admissible_pairs(0)))
    assert len(swept) == 1


def test_oracle_sweep_catches_mismatch(mocker):
    mocker.patch("xlaguerre.pipeline.eval_plain", return_value=to_scalar(7))
    with pytest.raises(OracleMismatch):
        list(oracle_sweep([type_one_pair(1)]))


@pytest.mark.slow
def test_oracle_sweep_small_pairs():
    pairs = admissible_pairs(2, 2)
    assert len(list(oracle_sweep(pairs))) == len(pairs)


@pytest.mark.slow
def test_oracle_sweep_every_pair_below_four():
    pairs = admissible_pairs(4, 0)
    assert len(list(oracle_sweep(pairs))) == len(pairs)


def test_polynomial_listing(empty_pair):
    listing = polynomial_listing(empty_pair, Fraction(1, 2), 2)
    assert listing[0] == {"n": 0, "degree": 0, "coefficients": ["1"]}
    assert listing[1] == {"n": 1, "degree": 1, "coefficients": ["1", "-2/3"]}


def test_analyze_worked_example(worked_pair):
    report = analyze(worked_pair).as_dict()
    assert report["inputs"] == {
        "m1": "(∅|3,2)",
        "m2": "(1,0|∅)",
        "alpha": "α",
        "convention": "paper",
    }
    assert report["bold_alpha"] == "α"
    assert report["admissible"]
    assert report["spectra"]["paper"]["infinity"]["rendered"] == "{n+2-α}_{n∈ℕ₀} ∪ {2, 3}"
    assert report["disjoint"]
    assert report["friedrichs"] is None
    assert report["convention_diff"] is None
    assert "spectra assume a generic α, i.e. α ∉ ℤ" in report["warnings"]


def test_analyze_numeric(worked_pair):
    report = analyze(worked_pair, Fraction(3, 2)).as_dict()
    assert report["friedrichs"] == "infinity"
    assert report["classification"]["zero"] == "limit-point"
    assert report["spectra"]["paper"]["zero"]["points"] == ["-3/2", "-1/2"]


def test_analyze_both_conventions(worked_pair):
    report = analyze(worked_pair, ALPHA, BOTH).as_dict()
    assert sorted(report["spectra"]) == ["paper", "strict"]
    assert report["convention_diff"]["infinity"] == {"paper_only": ["2", "3"], "strict_only": []}
    assert report["convention_diff"]["zero"]["paper_only"] == ["-α", "1-α"]


def test_analyze_type_one(type_one):
    report = analyze(type_one, Fraction(-1, 2)).as_dict()
    assert report["bold_alpha"] == "1/2"
    assert report["friedrichs"] == "zero"
    assert report["classification"]["deficiency"] == [1, 1]


def test_analyze_unknown_convention(empty_pair):
    with pytest.raises(ValueError):
        analyze(empty_pair, ALPHA, "loose")
