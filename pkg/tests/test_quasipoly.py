from fractions import Fraction

import pytest

from flagcurves import ParseError, QuasiPoly, parse_quasipoly

from gen import CASES, quasipoly

ORDER = 10


def test_leibniz(rng):
    for _ in range(CASES):
        f, g = quasipoly(rng), quasipoly(rng)
        assert (f * g).derivative() == f.derivative() * g + f * g.derivative()


def test_product_matches_series(rng):
    # product-to-sum identities checked against independent Taylor coefficients
    for _ in range(CASES):
        f, g = quasipoly(rng), quasipoly(rng)
        assert (f * g).series(ORDER) == f.series(ORDER) * g.series(ORDER)


def test_derivative_matches_series(rng):
    for _ in range(CASES):
        f = quasipoly(rng)
        assert f.derivative().series(ORDER - 1) == f.series(ORDER).derivative()


def test_ring_axioms(rng):
    for _ in range(CASES):
        f, g, h = quasipoly(rng), quasipoly(rng), quasipoly(rng)
        assert f * (g + h) == f * g + f * h
        assert (f * g) * h == f * (g * h)
        assert f - f == 0


def test_parse_round_trip(rng):
    for _ in range(CASES):
        f = quasipoly(rng)
        assert parse_quasipoly(str(f)) == f


def test_trig_identities():
    s, c = QuasiPoly.sin(3), QuasiPoly.cos(3)
    assert s * s + c * c == 1
    assert QuasiPoly.cosh(2) ** 2 - QuasiPoly.sinh(2) ** 2 == 1
    assert 2 * s * c == QuasiPoly.sin(6)


def test_negative_frequencies_normalise():
    assert QuasiPoly.sin(-2) == -QuasiPoly.sin(2)
    assert QuasiPoly.cos(-2) == QuasiPoly.cos(2)
    assert QuasiPoly.sin(0) == 0


def test_parse_examples():
    f = parse_quasipoly("2*x^2*exp(1/2 x)*cos(x) - 3")
    assert f == 2 * QuasiPoly.monomial(2) * QuasiPoly.exp(Fraction(1, 2)) * QuasiPoly.cos(1) - 3
    assert str(f) == "-3 + 2*x^2*exp(1/2 x)*cos(x)"


@pytest.mark.parametrize("text", ["", "sin(x", "exp(x^2)", "2*", "cos(y)", "-"])
def test_parse_rejects(text):
    with pytest.raises(ParseError):
        parse_quasipoly(text)
