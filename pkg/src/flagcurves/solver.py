"""Rational witnesses and inconsistency certificates for polynomial systems.

The outcome is a trichotomy.  ``witness`` is only returned after the
assignment has been substituted back into every equation, ``inconsistent``
only with a reduced Groebner basis equal to {1}.  Anything else, including
an exhausted budget, is ``unknown``; a failed search never counts as a proof
that no solution exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt, lcm
from typing import Sequence

from .errors import BudgetExhausted
from .groebner import DEFAULT_BUDGET, GroebnerBasis, buchberger, is_inconsistent
from .poly import _coerce

WITNESS = "witness"
INCONSISTENT = "inconsistent"
UNKNOWN = "unknown"

# values tried, in order, for a variable left free by elimination
FREE_VALUES = tuple(Fraction(v) for v in (0, 1, -1, 2, -2)) + (Fraction(1, 2), Fraction(-1, 2), Fraction(3), Fraction(-3))


@dataclass
class SolveOutcome:
    status: str
    assignment: dict[str, Fraction] | None = None
    certificate: GroebnerBasis | None = None
    reason: str | None = None

    @property
    def is_witness(self):
        return self.status == WITNESS

    def to_json(self) -> dict:
        out: dict = {"status": self.status}
        if self.assignment is not None:
            out["assignment"] = {k: str(v) for k, v in self.assignment.items()}
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_strings()
        if self.reason is not None:
            out["reason"] = self.reason
        return out


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def rational_roots(coeffs: Sequence) -> list[Fraction]:
    """Distinct rational roots of sum coeffs[k] x^k, ordered 0, 1, -1, 2, ..."""
    c = [Fraction(x) for x in coeffs]
    while c and not c[-1]:
        c.pop()
    if not c:
        raise ValueError("the zero polynomial has every number as a root")
    roots = []
    if not c[0]:
        roots.append(Fraction(0))
        while not c[0]:
            c.pop(0)
    if len(c) > 1:
        m = lcm(*(x.denominator for x in c))
        ints = [int(x * m) for x in c]
        g = 0
        for v in ints:
            g = gcd(g, v)
        ints = [v // g for v in ints]
        for p in _divisors(ints[0]):
            for q in _divisors(ints[-1]):
                if gcd(p, q) != 1:
                    continue
                for r in (Fraction(p, q), Fraction(-p, q)):
                    if _horner(ints, r) == 0 and r not in roots:
                        roots.append(r)
    return sorted(roots, key=lambda r: (abs(r), r < 0))


def _horner(coeffs, x):
    acc = Fraction(0)
    for v in reversed(coeffs):
        acc = acc * x + v
    return acc


class _Budget:
    def __init__(self, total):
        self.remaining = total

    def spend(self, n=1):
        self.remaining -= n
        if self.remaining < 0:
            raise BudgetExhausted([], n)


def _linear_pivot(eqs, order):
    """An (equation, variable) pair where the variable occurs only linearly with a constant coefficient."""
    for p in eqs:
        for v in order:
            if v not in p.variables:
                continue
            coeffs = p.coefficients_in(v)
            if len(coeffs) == 2 and coeffs[1].is_constant():
                return p, v, coeffs[1].constant_value(), coeffs[0]
    return None


def _search(eqs, order, budget, pending, fixed):
    budget.spend()
    eqs = [p for p in eqs if not p.is_zero()]
    if any(p.is_constant() for p in eqs):
        return None
    # (1) eliminate unknowns that occur linearly with constant coefficient
    while True:
        piv = _linear_pivot(eqs, order)
        if piv is None:
            break
        p, v, lead, rest = piv
        expr = -rest / lead
        pending = pending + [(v, expr)]
        eqs = [q.substitute({v: expr}) for q in eqs if q is not p]
        eqs = [q for q in eqs if not q.is_zero()]
        if any(q.is_constant() for q in eqs):
            return None
    if not eqs:
        return pending, fixed
    # (2) univariate equations: branch on their rational roots
    for p in eqs:
        used = p.variables
        if len(used) == 1:
            (v,) = used
            for r in rational_roots(p.univariate_coeffs(v)):
                found = _assign(eqs, order, budget, pending, fixed, v, r)
                if found is not None:
                    return found
            return None
    # (3) lex basis, then back-substitute from the last variable
    live = [v for v in order if any(v in p.variables for p in eqs)]
    gb = buchberger(eqs, "lex", variables=live, budget=max(budget.remaining, 0))
    budget.spend(max(gb.steps, 1))
    if gb.is_unit():
        return None
    basis = [g for g in gb.generators]
    for g in basis:
        if len(g.variables) == 1:
            return _search(basis, order, budget, pending, fixed)
    # (4) nothing univariate: the last variable is free, try small values
    last = next(v for v in reversed(live) if any(v in g.variables for g in basis))
    for value in FREE_VALUES:
        found = _assign(basis, order, budget, pending, fixed, last, value)
        if found is not None:
            return found
    return None


def _assign(eqs, order, budget, pending, fixed, v, value):
    sub = [q.substitute({v: value}) for q in eqs]
    return _search(sub, order, budget, pending, {**fixed, v: value})


def _finish(unknowns, pending, fixed):
    values = dict(fixed)
    for v, expr in reversed(pending):
        # free variables in a pending expression default to 0
        bind = {g: values.get(g, Fraction(0)) for g in expr.variables}
        values[v] = expr.evaluate(bind)
    return {u: values.get(u, Fraction(0)) for u in unknowns}


def solve_system(
    equations: Sequence,
    unknowns: Sequence[str],
    budget: int = DEFAULT_BUDGET,
) -> SolveOutcome:
    """Search for a rational solution; certify inconsistency when there is none."""
    unknowns = tuple(unknowns)
    eqs = [_coerce(p).with_gens(unknowns) for p in equations]
    eqs = [p for p in eqs if not p.is_zero()]
    counter = _Budget(budget)
    exhausted = False
    try:
        found = _search(eqs, unknowns, counter, [], {})
    except BudgetExhausted:
        found, exhausted = None, True
    if found is not None:
        assignment = _finish(unknowns, *found)
        if all(p.evaluate(assignment) == 0 for p in eqs):
            return SolveOutcome(WITNESS, assignment=assignment)
    try:
        gb = buchberger(eqs, "grevlex", variables=unknowns, budget=budget)
    except BudgetExhausted:
        return SolveOutcome(UNKNOWN, reason="budget-exhausted")
    if is_inconsistent(gb):
        return SolveOutcome(INCONSISTENT, certificate=gb)
    return SolveOutcome(UNKNOWN, reason="budget-exhausted" if exhausted else "no-rational-witness-found")


def find_rational_witness(system, budget: int = DEFAULT_BUDGET) -> SolveOutcome:
    """Decide a criterion system (anything with ``unknowns`` and ``equations``)."""
    return solve_system(system.equations, system.unknowns, budget)
