from fractions import Fraction

import pytest
from sympy.polys.domains import QQ
from sympy.polys.polyerrors import HeuristicGCDFailed

from xlaguerre.exact import (
    ALPHA,
    LAMBDA,
    SCALARS,
    AffinePoint,
    FactoredMeromorphic,
    GammaFactor,
    LaurentSeries,
    QuasiRationalSeries,
    determinant,
    meromorphic_div,
    rising_factorial,
    series_differentiate,
    to_scalar,
    wronskian,
)
from xlaguerre.exact.scalars import (
    ONE,
    falling_factorial,
    parse_rational,
    render_scalar,
    scalar_add,
    scalar_div,
    scalar_mul,
    shift_lambda,
    substitute_alpha,
    to_fraction,
)
from xlaguerre.seeds import laguerre
from xlaguerre.utils.errors import NonAffineFactor, ParameterDomainError, TruncationExhausted


def test_parse_rational():
    assert parse_rational("3/4") == QQ(3, 4)
    assert parse_rational(" -2 ") == QQ(-2)
    assert parse_rational("0.5") == QQ(1, 2)
    with pytest.raises(ParameterDomainError):
        parse_rational("one half")


def test_conversions():
    assert to_scalar("1/2") == SCALARS(QQ(1, 2))
    assert to_scalar(Fraction(1, 3)) == SCALARS(QQ(1, 3))
    assert to_fraction("3/4") == Fraction(3, 4)
    assert to_fraction(to_scalar(-5)) == Fraction(-5)
    with pytest.raises(ValueError):
        to_fraction(ALPHA)


def test_factorials():
    assert rising_factorial(-LAMBDA, 2) == LAMBDA**2 - LAMBDA
    assert rising_factorial(ALPHA + 1, 0) == 1
    assert falling_factorial(ALPHA, 2) == ALPHA * (ALPHA - 1)
    with pytest.raises(ValueError):
        rising_factorial(ALPHA, -1)


def test_lambda_and_alpha_substitution():
    assert shift_lambda(LAMBDA**2, 1) == (LAMBDA + 1) ** 2
    assert substitute_alpha(ALPHA * LAMBDA, Fraction(1, 2)) == LAMBDA / 2
    assert render_scalar(ALPHA * LAMBDA) == "α*λ"


def test_scalar_ops_without_heuristic_gcd(mocker):
    cases = [
        (scalar_div, ALPHA**2 - 1, 2 * ALPHA + 2),
        (scalar_div, LAMBDA, 1 - ALPHA),
        (scalar_mul, 2 * ALPHA / (3 * LAMBDA - 3), 3 * (LAMBDA - 1) / (4 * ALPHA * LAMBDA)),
        (scalar_add, 1 / (ALPHA - LAMBDA), 1 / (LAMBDA - ALPHA)),
    ]
    expected = [op(a, b) for op, a, b in cases]
    mocker.patch(
        "xlaguerre.exact.scalars._heuristic_cancel", side_effect=HeuristicGCDFailed("no luck")
    )
    for (op, a, b), value in zip(cases, expected):
        result = op(a, b)
        assert (result.numer, result.denom) == (value.numer, value.denom)
    assert scalar_div(LAMBDA, 1 - ALPHA).denom.LC > 0
    with pytest.raises(ZeroDivisionError):
        scalar_div(ALPHA, ALPHA - ALPHA)


def test_affine_point():
    point = AffinePoint.of(2 - ALPHA)
    assert point == AffinePoint(s=-1, q=Fraction(2))
    assert point.render() == "2-α"
    assert point.value(Fraction(1, 2)) == Fraction(3, 2)
    assert point.shifted(3).offset_from(point) == 3
    assert point.offset_from(AffinePoint(s=0, q=Fraction(2))) is None
    assert AffinePoint(s=0, q=Fraction(-1, 2)).render() == "-1/2"
    with pytest.raises(ValueError):
        AffinePoint.of(ALPHA / 2)
    with pytest.raises(ParameterDomainError):
        point.value()


def test_laurent_series_truncation():
    series = LaurentSeries({0: ONE, 1: to_scalar(2), 5: ONE}, prec=3)
    assert series.coeffs == {0: ONE, 1: to_scalar(2)}
    assert series[2] == 0
    with pytest.raises(TruncationExhausted):
        series[3]
    product = series * LaurentSeries({1: ONE})
    assert product.prec == 4
    assert product[1] == 1


@pytest.mark.parametrize(
    "tag,expected",
    [
        # x^{−α}·1 → (−α)x^{−α−1}
        ((-1, 0), {-1: -ALPHA}),
        # e^x·1 → e^x
        ((0, 1), {0: ONE}),
    ],
)
def test_series_differentiate(tag, expected):
    f = QuasiRationalSeries.monomial(ALPHA, LaurentSeries.constant(1), tag)
    derivative = series_differentiate(f)
    assert derivative.tags == [tag]
    assert derivative.terms[tag].coeffs == expected


def test_series_differentiate_lowers_the_laguerre_family():
    # d/dx x^{−α}L₁^{−α}(x) = (1−α) x^{−α−1} L₁^{−α−1}(x)
    f = QuasiRationalSeries.monomial(
        ALPHA, LaurentSeries.from_poly(laguerre(1, -ALPHA)), (-1, 0)
    )
    expected = LaurentSeries.from_poly(laguerre(1, -ALPHA - 1)).shift(-1) * (1 - ALPHA)
    assert series_differentiate(f).terms[(-1, 0)].coeffs == expected.coeffs


def _constant(value) -> QuasiRationalSeries:
    return QuasiRationalSeries.monomial(ALPHA, LaurentSeries.constant(value))


def test_determinant():
    assert determinant([[_constant(3)]]) == _constant(3)
    x = QuasiRationalSeries.monomial(ALPHA, LaurentSeries({1: ONE}))
    zero = QuasiRationalSeries(ALPHA)
    _, det = determinant([[_constant(1), x], [zero, _constant(1)]]).single_term()
    assert det.coeffs == {0: ONE}


def test_determinant_large_goes_through_elimination():
    # identity plus a strictly upper part, larger than the cofactor threshold
    x = LaurentSeries({1: ONE})
    size = 6
    matrix = [
        [
            QuasiRationalSeries.monomial(
                ALPHA, LaurentSeries.constant(1) if i == j else (x if j > i else LaurentSeries())
            )
            for j in range(size)
        ]
        for i in range(size)
    ]
    _, det = determinant(matrix).single_term()
    assert det.coeffs == {0: ONE}


def test_determinant_elimination_falls_back_to_cofactors(mocker):
    mocker.patch(
        "xlaguerre.exact.series.DomainMatrix.det", side_effect=HeuristicGCDFailed("no luck")
    )
    # identity plus the all-ones matrix, det = 1 + size
    size = 5
    matrix = [
        [
            QuasiRationalSeries.monomial(ALPHA, LaurentSeries.constant(2 if i == j else 1))
            for j in range(size)
        ]
        for i in range(size)
    ]
    _, det = determinant(matrix).single_term()
    assert det.coeffs == {0: to_scalar(6)}


def test_wronskian():
    l1 = QuasiRationalSeries.monomial(ALPHA, LaurentSeries.from_poly(laguerre(1, ALPHA)))
    _, value = wronskian([l1, _constant(1)]).single_term()
    assert value.coeffs == {0: ONE}
    _, empty = wronskian([], base=ALPHA).single_term()
    assert empty.coeffs == {0: ONE}


def test_factored_meromorphic_cancellation():
    two = AffinePoint(s=0, q=Fraction(2))
    product = FactoredMeromorphic(roots_num=(two,)) * FactoredMeromorphic(roots_den=(two,))
    assert product.roots_num == ()
    assert product.roots_den == ()
    scaled = FactoredMeromorphic() * ALPHA
    assert scaled.constant == ALPHA


def test_meromorphic_div():
    zero = GammaFactor(AffinePoint(s=0, q=Fraction(0)))
    f = FactoredMeromorphic.from_scalar((LAMBDA - 2) / ALPHA, sign_suppressed=True)
    g = FactoredMeromorphic.gamma_ratio([zero], [])
    quotient = meromorphic_div(f, f * g)
    assert quotient.gamma_den == (zero,)
    assert quotient.gamma_num == quotient.roots_num == quotient.roots_den == ()
    assert quotient.constant == ONE
    assert quotient.sign_suppressed


def test_factored_meromorphic_from_scalar():
    f = FactoredMeromorphic.from_scalar(2 * (LAMBDA - 2) / (ALPHA * (LAMBDA + ALPHA)))
    assert f.constant == 2 / ALPHA
    assert f.roots_num == (AffinePoint(s=0, q=Fraction(2)),)
    assert f.roots_den == (AffinePoint(s=-1, q=Fraction(0)),)
    assert f.rational_part() == 2 * (LAMBDA - 2) / (ALPHA * (LAMBDA + ALPHA))
    with pytest.raises(NonAffineFactor):
        FactoredMeromorphic.from_scalar(LAMBDA**2 + 1)
    with pytest.raises(NonAffineFactor):
        FactoredMeromorphic.from_scalar(ALPHA * LAMBDA - 1)
    with pytest.raises(ZeroDivisionError):
        FactoredMeromorphic.from_scalar(to_scalar(0))


def test_factored_meromorphic_shift_and_render():
    minus_alpha = AffinePoint(s=-1, q=Fraction(0))
    f = FactoredMeromorphic.gamma_ratio([GammaFactor(minus_alpha)], [GammaFactor(minus_alpha)])
    assert f.gamma_num == () and f.gamma_den == ()
    g = FactoredMeromorphic(
        constant=ALPHA,
        gamma_num=(GammaFactor(minus_alpha),),
        roots_den=(AffinePoint(s=0, q=Fraction(3)),),
        sign_suppressed=True,
    )
    assert g.render() == "±(α) · Γ(-α-λ) · 1/(λ-3)"
    shifted = g.shift_lambda(1)
    assert shifted.gamma_num == (GammaFactor(AffinePoint(s=-1, q=Fraction(-1))),)
    assert shifted.roots_den == (AffinePoint(s=0, q=Fraction(2)),)
    assert g.equals_up_to_sign(-g)
    assert g.as_dict()["gamma_num"] == ["Γ(-α-λ)"]
