import math
from fractions import Fraction

import pytest

from xlaguerre.spectral import (
    ZERO,
    eigenvalues_tau_numeric,
    level_solutions,
    orthogonality_check,
    plot_data,
    spectrum,
)
from xlaguerre.utils.errors import InadmissibleError, ParameterDomainError

HALF = Fraction(1, 2)
BETA = Fraction(-1, 2)


@pytest.mark.parametrize(
    "pair_fixture,alpha,count",
    [
        ("empty_pair", HALF, 5),
        ("type_one", BETA, 5),
        pytest.param("worked_pair", Fraction(3, 2), 5, marks=pytest.mark.slow),
    ],
)
def test_orthogonality(request, pair_fixture, alpha, count):
    pair = request.getfixturevalue(pair_fixture)
    assert orthogonality_check(pair, alpha, count) < 1e-8


def test_orthogonality_needs_even_partition(odd_pair):
    with pytest.raises(InadmissibleError):
        orthogonality_check(odd_pair, HALF, 3)


def test_orthogonality_needs_zero_free_omega(worked_pair):
    # Ω of the worked example has a zero on the half-line at α = 1/2
    with pytest.raises(ParameterDomainError):
        orthogonality_check(worked_pair, HALF, 3)


def test_tau_zero_eigenvalues_are_the_spectrum_of_l0(type_one):
    window = (-1.0, 4.8)
    eigenvalues = eigenvalues_tau_numeric(type_one, BETA, 0.0, window)
    expected = spectrum(type_one, BETA, ZERO).values_in(*window, BETA)
    assert expected == [0.0, 1.0, 2.0, 3.0, 4.0]
    assert eigenvalues == pytest.approx(expected, abs=1e-9)


def test_level_solutions_residuals(empty_pair):
    solutions = level_solutions(empty_pair, HALF, 1.0, (-0.3, 3.3))
    # M∞ stays below 1 on (5/2, 33/10)
    assert len(solutions) == 3
    assert all(solution.residual < 1e-9 for solution in solutions)


def test_plot_data(empty_pair):
    rows = plot_data(empty_pair, HALF, (-3, 3), 13)
    assert len(rows) == 13
    nans = [lam for lam, value in rows if math.isnan(value)]
    assert nans == [-0.5, 0.5, 1.5, 2.5]
