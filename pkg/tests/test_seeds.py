from fractions import Fraction

import pytest

from xlaguerre.exact.scalars import ALPHA, LAMBDA, ONE, to_scalar
from xlaguerre.exact.series import SERIES_RING
from xlaguerre.seeds import (
    FIRST,
    FOURTH,
    SECOND,
    THIRD,
    SeedSpec,
    kummer_series,
    laguerre,
    negate_argument,
    seed,
    solution_h,
    solution_htilde,
)
from xlaguerre.utils.errors import ParameterPoleError


def _poly(*coeffs):
    return SERIES_RING.from_dict({(k,): to_scalar(c) for k, c in enumerate(coeffs)})


def test_laguerre():
    assert laguerre(0, ALPHA) == _poly(1)
    assert laguerre(1, ALPHA) == SERIES_RING.from_dict({(0,): ALPHA + 1, (1,): -ONE})
    assert laguerre(1, -ALPHA) == SERIES_RING.from_dict({(0,): 1 - ALPHA, (1,): -ONE})
    assert laguerre(2, 0) == _poly(1, -2, Fraction(1, 2))
    with pytest.raises(ValueError):
        laguerre(-1, ALPHA)


def test_negate_argument():
    assert negate_argument(_poly(1, 2, 3)) == _poly(1, -2, 3)


@pytest.mark.parametrize(
    "kind,tag", [(FIRST, (0, 0)), (SECOND, (0, 1)), (THIRD, (-1, 0)), (FOURTH, (-1, 1))]
)
def test_seed_tags(kind, tag):
    assert SeedSpec(kind, 0).tag == tag
    assert seed(SeedSpec(kind, 0), ALPHA).tags == [tag]


def test_seed_polynomials():
    assert SeedSpec(FIRST, 3).polynomial(ALPHA) == laguerre(3, ALPHA)
    assert SeedSpec(SECOND, 1).polynomial(ALPHA) == SERIES_RING.from_dict(
        {(0,): ALPHA + 1, (1,): ONE}
    )
    assert SeedSpec(THIRD, 1, alpha_offset=1).polynomial(ALPHA) == laguerre(1, -ALPHA - 1)
    assert SeedSpec(FOURTH, 2).render() == "e^x x^{-α} L_2^{-α}(-x)"
    with pytest.raises(ValueError):
        SeedSpec(5, 0)


def test_kummer_series():
    series = kummer_series(-LAMBDA, ALPHA + 1, 2)
    assert series.prec == 2
    assert series.coeffs == {0: ONE, 1: -LAMBDA / (ALPHA + 1)}
    # terminating at λ = 2
    exact = kummer_series(to_scalar(-2), ALPHA + 1, 4)
    assert exact.is_exact
    assert exact.degree() == 2


def test_kummer_series_pole():
    with pytest.raises(ParameterPoleError):
        kummer_series(to_scalar(1), to_scalar(-1), 5)


def test_solutions():
    h = solution_h(ALPHA, LAMBDA, 2)
    assert h.tags == [(0, 0)]
    assert h.terms[(0, 0)][0] == 1
    htilde = solution_htilde(Fraction(1, 2), 0, 3)
    assert htilde.tags == [(-1, 0)]
    series = htilde.terms[(-1, 0)]
    assert series[0] == 1
    assert series[1] == -1
