import random

import pytest

from xlaguerre import config
from xlaguerre.exact.scalars import ALPHA, LAMBDA, ONE, render_scalar, scalar_add, scalar_sub
from xlaguerre.maya import DiagramPair, MayaDiagram, Partition, enumerate_pairs, parse_diagram
from xlaguerre.oracle import FIRST_KIND, SECOND_KIND, omega_h, omega_htilde
from xlaguerre.shifts import (
    STEPS,
    reduce_to_canonical,
    reduce_to_conjugate,
    shift_constants_first,
    shift_constants_plain,
    shift_report,
    step_reduce,
    step_reduce_first,
    step_reduce_plain,
)
from xlaguerre.utils.errors import StepPreconditionError


def test_worked_example_first_kind(worked_pair):
    first = shift_constants_first(worked_pair)
    assert (first.t1, first.t2) == (0, 2)
    assert first.C1 == 1
    assert first.C2 == ALPHA * (ALPHA - 1)
    assert first.C3 == (ALPHA + 1) * (ALPHA + 2) ** 2 * (ALPHA + 3)
    assert first.mu == Partition((2, 2))
    assert first.nu == Partition(())


def test_worked_example_second_kind(worked_pair):
    report = shift_report(worked_pair)
    second = report.second
    assert (second.t1p, second.t2p) == (-4, 2)
    assert second.D1 == ALPHA * (ALPHA + 1) * (ALPHA + 2) * (ALPHA + 3) / (LAMBDA * (LAMBDA - 1))
    assert second.D2 == (LAMBDA + ALPHA) * (LAMBDA + ALPHA - 1) / ((ALPHA + 2) * (ALPHA + 3))
    assert second.D3 == report.first.C3
    assert second.mup == Partition((2, 2))
    assert report.alpha_prime == ALPHA - 2
    assert report.alpha_second == ALPHA + 2


def test_first_kind_negative_shift():
    pair = DiagramPair(parse_diagram("(|1,0)"), MayaDiagram())
    first = shift_constants_first(pair)
    assert first.t1 == -2
    assert first.C1 == (-LAMBDA) * (1 - LAMBDA) / ((ALPHA + 1) * (ALPHA + 2))
    assert first.C2 == 1


def test_canonical_walk_matches_closed_form(worked_pair):
    walk = reduce_to_canonical(worked_pair)
    assert walk.trace() == ["d", "d"]
    assert walk.constant == shift_report(worked_pair).C
    assert walk.pair == shift_report(worked_pair).canonical
    assert walk.alpha == ALPHA - 2


def test_conjugate_walk_matches_closed_form(worked_pair):
    walk = reduce_to_conjugate(worked_pair)
    assert walk.trace() == ["b⁻¹", "b⁻¹", "a", "a", "d", "d"]
    assert walk.constant == shift_report(worked_pair).D
    assert walk.lam == LAMBDA - 4


def test_step_b():
    pair = DiagramPair(parse_diagram("(0|)"), MayaDiagram())
    step = step_reduce_first(pair, "b")
    assert step.constant == ALPHA
    assert (step.d_alpha, step.d_lambda) == (-1, 1)
    assert step.pair.is_trivial


def test_inverse_step_a(empty_pair):
    step = step_reduce_first(empty_pair, "a", inverse=True)
    assert step.pair.m1 == parse_diagram("(|0)")
    assert step.constant == -ALPHA / (LAMBDA + 1)
    assert (step.d_alpha, step.d_lambda) == (-1, 1)
    assert step.inverse


def test_plain_step_keeps_lambda():
    pair = DiagramPair(MayaDiagram(), parse_diagram("(0|)"))
    step = step_reduce_plain(pair, "d")
    assert step.constant == 1
    assert (step.d_alpha, step.d_lambda) == (-1, 0)


@pytest.mark.parametrize("kind", [FIRST_KIND, SECOND_KIND])
def test_step_precondition(empty_pair, kind):
    with pytest.raises(StepPreconditionError):
        step_reduce(kind, empty_pair, "a")


def test_unknown_step(empty_pair):
    with pytest.raises(ValueError):
        step_reduce(FIRST_KIND, empty_pair, "e")


def test_trivial_report(empty_pair):
    report = shift_report(empty_pair)
    assert report.C == 1
    assert report.D == 1
    assert reduce_to_canonical(empty_pair).trace() == []


def test_report_as_dict(worked_pair):
    data = shift_report(worked_pair).as_dict()
    assert (data["t1"], data["t2"], data["t1p"], data["t2p"]) == (0, 2, -4, 2)
    assert data["mu"] == "(2,2)"
    assert data["C1"] == "1"
    assert data["alpha_prime"] == render_scalar(ALPHA - 2)


def test_plain_constants(worked_pair):
    c3, d3 = shift_constants_plain(worked_pair)
    assert c3 == d3 == (ALPHA + 1) * (ALPHA + 2) ** 2 * (ALPHA + 3)
    assert shift_constants_plain(DiagramPair(MayaDiagram(), MayaDiagram()), ALPHA) == (ONE, ONE)


SERIES_ORDER = 8
OMEGAS = {FIRST_KIND: omega_h, SECOND_KIND: omega_htilde}


def _step_applies(kind: str, which: str, pair: DiagramPair) -> bool:
    try:
        step_reduce(kind, pair, which)
    except StepPreconditionError:
        return False
    return True


def _step_instances(kind: str, which: str, count: int, max_seeds: int) -> list[DiagramPair]:
    """Random pairs with every index below 4 on which the step can be taken"""
    candidates = [
        pair
        for pair in enumerate_pairs(4)
        if pair.r <= max_seeds and _step_applies(kind, which, pair)
    ]
    return random.Random(f"{kind}-{which}").sample(candidates, min(count, len(candidates)))


def _check_step_series(kind: str, which: str, pair: DiagramPair) -> None:
    """Ω_pair at (α, λ) = ± constant · Ω_new at (α + dα, λ + dλ), up to x^SERIES_ORDER"""
    step = step_reduce(kind, pair, which)
    seeds = max(pair.r, step.pair.r) + 1
    trunc = SERIES_ORDER + 2 * seeds + config.ORACLE_TRUNCATION_GUARD
    omega = OMEGAS[kind]
    tag, before = omega(pair, ALPHA, trunc).single_term()
    new_tag, after = omega(
        step.pair, ALPHA + step.d_alpha, trunc, LAMBDA + step.d_lambda
    ).single_term()
    assert tag == new_tag == (0, 0)
    after = after * step.constant
    same = not any(scalar_sub(before[k], after[k]) for k in range(SERIES_ORDER))
    opposite = not any(scalar_add(before[k], after[k]) for k in range(SERIES_ORDER))
    assert same or opposite, f"step {which} ({kind}) on {pair}"


@pytest.mark.parametrize("which", STEPS)
@pytest.mark.parametrize("kind", [FIRST_KIND, SECOND_KIND])
def test_step_series_identity(kind, which):
    pairs = _step_instances(kind, which, 2, max_seeds=2)
    assert pairs
    for pair in pairs:
        _check_step_series(kind, which, pair)


def test_step_series_identity_shifted_lambda():
    # lands on (∅|∅), (∅|2) at (α − 1, λ + 1)
    pair = DiagramPair(parse_diagram("(0|)"), parse_diagram("(|2)"))
    _check_step_series(FIRST_KIND, "b", pair)


@pytest.mark.slow
@pytest.mark.parametrize("which", STEPS)
@pytest.mark.parametrize("kind", [FIRST_KIND, SECOND_KIND])
def test_step_series_identity_random_instances(kind, which):
    pairs = _step_instances(kind, which, 30, max_seeds=3)
    assert len(pairs) == 30
    for pair in pairs:
        _check_step_series(kind, which, pair)
