from fractions import Fraction

import pytest

from xlaguerre.evalzero import (
    eval_first_kind,
    eval_plain,
    eval_second_kind,
    first_kind_lambda_roots,
    threshold_index,
    vandermonde,
)
from xlaguerre.exact.scalars import ALPHA, LAMBDA, AffinePoint
from xlaguerre.maya import Partition

SQUARE = Partition((2, 2))
EMPTY = Partition(())


def test_vandermonde():
    assert vandermonde([-3, -2, -LAMBDA]) == (3 - LAMBDA) * (2 - LAMBDA)
    assert vandermonde([1, ALPHA, 1]) == 0
    assert vandermonde([]) == 1


@pytest.mark.parametrize(
    "indices,rho,expected",
    [((3, 2), 2, 3), ((3, 1), 2, 2), ((), 0, 1), ((0,), 1, 1)],
)
def test_threshold_index(indices, rho, expected):
    assert threshold_index(indices, rho) == expected


def test_eval_plain():
    assert eval_plain(EMPTY, EMPTY, ALPHA) == 1
    # L₁^{α−1}(−x) at 0
    assert eval_plain(EMPTY, Partition((1,)), ALPHA - 1) == ALPHA


def test_eval_first_kind_type_one():
    assert eval_first_kind(EMPTY, Partition((1,)), ALPHA - 1) == -(LAMBDA + ALPHA + 1)


def test_worked_example_evaluations():
    e1 = eval_first_kind(SQUARE, EMPTY, ALPHA - 2)
    e2 = eval_second_kind(SQUARE, EMPTY, ALPHA + 2, LAMBDA - 4)
    assert e1 == -ALPHA * (ALPHA + 1) * (2 - LAMBDA) * (3 - LAMBDA) / 12
    expected = ALPHA * (ALPHA - 1) * LAMBDA * (LAMBDA - 1) / 12
    assert e2 in (expected, -expected)


def test_first_kind_lambda_roots():
    roots = first_kind_lambda_roots(SQUARE, EMPTY, ALPHA - 2)
    assert roots == [AffinePoint(s=0, q=Fraction(2)), AffinePoint(s=0, q=Fraction(3))]
