from flagcurves import MultiPoly, RationalFunction
from flagcurves.ratfunc import ratfunc_derivative, ratfunc_series

from gen import CASES, nonzero_rational, univariate

x = MultiPoly.var("x")


def random_function(rng):
    num = univariate(rng)
    while True:
        den = univariate(rng, degree=3) + nonzero_rational(rng)
        if den.constant_term():
            return RationalFunction(num, den)


def test_derivative_matches_series(rng):
    order = 10
    for _ in range(CASES):
        f = random_function(rng)
        lhs = ratfunc_series(ratfunc_derivative(f, "x"), "x", order - 1)
        assert lhs == ratfunc_series(f, "x", order).derivative()


def test_field_operations(rng):
    for _ in range(CASES):
        f, g = random_function(rng), random_function(rng)
        assert (f + g) - g == f
        if not g.num.is_zero():
            assert (f * g) / g == f
        assert f * g == g * f


def test_reduction():
    f = RationalFunction(x**2 - 1, x - 1)
    assert f.num == x + 1
    assert f.den == 1
    g = RationalFunction(2 * x, 4 * x**2)
    assert g == RationalFunction(1, 2 * x)


def test_multivariate_equality_by_cross_multiplication():
    p, q, t = MultiPoly.symbols("pqt")
    f = RationalFunction(p**2 * t * (1 + p * q * t), (1 + p * q * t) ** 2)
    assert f == RationalFunction(p**2 * t, 1 + p * q * t)


def test_substitute():
    p, q, t = MultiPoly.symbols("pqt")
    f = RationalFunction(p**2 * t, 1 + p * q * t)
    assert f.substitute({"q": 0}) == RationalFunction(p**2 * t)
