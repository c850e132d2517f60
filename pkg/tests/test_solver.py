from fractions import Fraction

import pytest

from flagcurves import MultiPoly, solve_system
from flagcurves.solver import INCONSISTENT, UNKNOWN, WITNESS, rational_roots

from gen import CASES, poly, rational

GENS = ("x", "y", "z")


def test_rational_roots():
    # (x - 1)(2x + 3)(x^2 - 2) and a root at 0
    x = MultiPoly.var("x")
    p = x * (x - 1) * (2 * x + 3) * (x**2 - 2)
    assert rational_roots(p.univariate_coeffs("x")) == [0, 1, Fraction(-3, 2)]
    assert rational_roots([1, 0, 1]) == []
    with pytest.raises(ValueError):
        rational_roots([0, 0])


def test_planted_solution_round_trip(rng):
    found = 0
    for _ in range(CASES):
        point = {g: rational(rng, 3, 2) for g in GENS}
        eqs = [p - p.evaluate(point) for p in (poly(rng, GENS, 3, 2) for _ in range(rng.randint(1, 3)))]
        out = solve_system(eqs, GENS)
        # a consistent system is never certified inconsistent
        assert out.status in (WITNESS, UNKNOWN)
        if out.status == WITNESS:
            found += 1
            assert all(e.evaluate(out.assignment) == 0 for e in eqs)
        else:
            assert out.reason == "no-rational-witness-found"
    assert found >= CASES * 95 // 100


def test_inconsistent_system():
    x, y = MultiPoly.symbols("xy")
    out = solve_system([x * y - 1, x**2, y - 3], ("x", "y"))
    assert out.status == INCONSISTENT
    assert out.certificate.is_unit()


def test_irrational_only_solutions_stay_unknown():
    x = MultiPoly.var("x")
    out = solve_system([x**2 - 2], ("x",))
    assert out.status == UNKNOWN
    assert out.reason == "no-rational-witness-found"


def test_free_variables_get_values():
    x, y, z = MultiPoly.symbols("xyz")
    out = solve_system([x * y - z], GENS)
    assert out.status == WITNESS
    assert out.assignment["x"] * out.assignment["y"] == out.assignment["z"]


def test_budget_exhaustion_is_unknown():
    x, y, z = MultiPoly.symbols("xyz")
    eqs = [x**3 - 2 * x * y + z - 7, x**2 * y - 2 * y**2 + x - 5, z**2 * x - y * z + 3 * y**3 - 1]
    out = solve_system(eqs, GENS, budget=3)
    assert out.status == UNKNOWN
    assert out.reason == "budget-exhausted"


def test_json():
    x = MultiPoly.var("x")
    assert solve_system([x - Fraction(1, 2)], ("x",)).to_json() == {"status": "witness", "assignment": {"x": "1/2"}}
    assert solve_system([x, x - 1], ("x",)).to_json() == {"status": "inconsistent", "certificate": ["1"]}
