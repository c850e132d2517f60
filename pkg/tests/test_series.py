from fractions import Fraction

import pytest

from flagcurves import SeriesDomainError, TruncatedSeries, series_compose, series_elementary

from gen import CASES, rational


@pytest.mark.parametrize("order", [4, 8, 16, 24])
def test_tan_times_cos_is_sin(order):
    tan = series_elementary("tan", 1, order)
    cos = series_elementary("cos", 1, order)
    assert tan * cos == series_elementary("sin", 1, order)


@pytest.mark.parametrize("order", [4, 8, 16, 24])
def test_tanh_times_cosh_is_sinh(order):
    lam = Fraction(1, 2)
    assert series_elementary("tanh", lam, order) * series_elementary("cosh", lam, order) == series_elementary(
        "sinh", lam, order
    )


def test_tan_coefficients():
    tan = series_elementary("tan", 1, 8)
    assert tan.coeffs[:8] == (0, 1, 0, Fraction(1, 3), 0, Fraction(2, 15), 0, Fraction(17, 315))


def test_exp_addition(rng):
    for _ in range(CASES // 10):
        a, b = rational(rng), rational(rng)
        assert series_elementary("exp", a, 12) * series_elementary("exp", b, 12) == series_elementary("exp", a + b, 12)


def test_pythagoras():
    s, c = series_elementary("sin", 3, 16), series_elementary("cos", 3, 16)
    assert s * s + c * c == TruncatedSeries.constant(1, 16)
    sh, ch = series_elementary("sinh", 3, 16), series_elementary("cosh", 3, 16)
    assert ch * ch - sh * sh == TruncatedSeries.constant(1, 16)


def test_derivative_drops_order():
    s = series_elementary("sin", 1, 10)
    d = s.derivative()
    assert d.order == 9
    assert d == series_elementary("cos", 1, 9)


def test_compose_square_with_tan():
    square = TruncatedSeries.from_coeffs([0, 0, 1], 6)
    out = series_compose(square, series_elementary("tan", 1, 6))
    assert out.coeffs[:6] == (0, 0, 1, 0, Fraction(2, 3), 0)


def test_exp_of_log1p():
    order = 12
    log1p = TruncatedSeries.from_coeffs([0] + [Fraction((-1) ** (k + 1), k) for k in range(1, order)], order)
    out = series_compose(series_elementary("exp", 1, order), log1p)
    assert out == TruncatedSeries.from_coeffs([1, 1], order)


def test_compose_needs_zero_constant_term():
    with pytest.raises(SeriesDomainError):
        series_compose(series_elementary("exp", 1, 6), series_elementary("cos", 1, 6))


def test_division_needs_unit_constant_term():
    with pytest.raises(SeriesDomainError):
        series_elementary("cos", 1, 6) / series_elementary("sin", 1, 6)


def test_unknown_kind():
    with pytest.raises(ValueError):
        series_elementary("sec", 1, 6)
