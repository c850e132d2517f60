"""Buchberger's algorithm over Q.

Works on raw ``{exponent tuple: Fraction}`` dicts over a fixed variable tuple
and wraps results back into :class:`MultiPoly`.  Pairs are processed by the
normal strategy (smallest lcm first under the chosen order, ties broken by
pair index), with the product and chain criteria.  The reduced basis is
unique, so the output does not depend on the input order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import BudgetExhausted
from .poly import ORDERS, MultiPoly, _coerce

DEFAULT_BUDGET = 100_000


def _lm(p, key):
    return max(p, key=key)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _monic(p, key):
    lead = p[_lm(p, key)]
    if lead == 1:
        return p
    inv = 1 / lead
    return {e: c * inv for e, c in p.items()}


class _Counter:
    def __init__(self, budget):
        self.budget = budget
        self.steps = 0

    def tick(self, basis):
        self.steps += 1
        if self.budget is not None and self.steps > self.budget:
            raise BudgetExhausted(basis, self.steps)


def _reduce(p, basis, leads, key, counter, partial=()):
    """Full normal form of p with respect to basis (monic polynomials)."""
    p = dict(p)
    rem = {}
    while p:
        lt = _lm(p, key)
        c = p[lt]
        for g, lg in zip(basis, leads):
            if _divides(lg, lt):
                counter.tick(partial)
                shift = tuple(a - b for a, b in zip(lt, lg))
                for e, v in g.items():
                    k = tuple(a + b for a, b in zip(e, shift))
                    s = p.get(k, 0) - c * v
                    if s:
                        p[k] = s
                    else:
                        p.pop(k, None)
                break
        else:
            rem[lt] = c
            del p[lt]
    return rem


def _spoly(f, g, lf, lg):
    m = _lcm(lf, lg)
    sf = tuple(a - b for a, b in zip(m, lf))
    sg = tuple(a - b for a, b in zip(m, lg))
    out = {}
    for e, c in f.items():
        out[tuple(a + b for a, b in zip(e, sf))] = c
    for e, c in g.items():
        k = tuple(a + b for a, b in zip(e, sg))
        s = out.get(k, 0) - c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _as_multipoly(p, variables):
    return MultiPoly._raw(tuple(variables), dict(p))


@dataclass(frozen=True)
class GroebnerBasis:
    order: str
    variables: tuple[str, ...]
    generators: tuple[MultiPoly, ...]
    steps: int = 0

    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0] == 1

    def reduce(self, p) -> MultiPoly:
        """Normal form of p modulo the ideal."""
        key = ORDERS[self.order]
        p = _coerce(p).with_gens(self.variables)
        basis = [g.terms for g in self.generators]
        leads = [_lm(g, key) for g in basis]
        nf = _reduce(p.terms, basis, leads, key, _Counter(None))
        return _as_multipoly(nf, self.variables)

    def contains(self, p) -> bool:
        return self.reduce(p).is_zero()

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def to_strings(self) -> list[str]:
        return [str(g) for g in self.generators]


def _common_variables(gens: Sequence[MultiPoly], variables):
    if variables is not None:
        return tuple(variables)
    out: tuple = ()
    for p in gens:
        out = out + tuple(g for g in p.gens if g not in out)
    return out


def buchberger(
    gens: Iterable,
    order: str = "grevlex",
    variables: Sequence[str] | None = None,
    budget: int | None = DEFAULT_BUDGET,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Raises BudgetExhausted (carrying the partial basis as MultiPolys) once
    more than ``budget`` single reduction steps have been taken.
    """
    key = ORDERS[order]
    polys = [_coerce(p) for p in gens]
    variables = _common_variables(polys, variables)
    nv = len(variables)
    work = [p.with_gens(variables).terms for p in polys]
    work = [_monic(p, key) for p in work if p]
    if not work:
        return GroebnerBasis(order, variables, ())
    one = (0,) * nv
    if any(len(p) == 1 and one in p for p in work):
        return GroebnerBasis(order, variables, (MultiPoly.constant(1, variables),))

    counter = _Counter(budget)
    basis: list[dict] = []
    leads: list[tuple] = []
    pairs: set = set()

    def partial():
        return [_as_multipoly(g, variables) for g in basis]

    def add(h):
        h = _monic(h, key)
        lh = _lm(h, key)
        idx = len(basis)
        basis.append(h)
        leads.append(lh)
        for i in range(idx):
            if leads[i] is not None:
                pairs.add((i, idx))
        return lh

    try:
        for p in work:
            h = _reduce(p, [b for b in basis], leads, key, counter)
            if h:
                if _is_unit(h, one):
                    return GroebnerBasis(order, variables, (MultiPoly.constant(1, variables),), counter.steps)
                add(h)

        while pairs:
            i, j = min(pairs, key=lambda ij: (key(_lcm(leads[ij[0]], leads[ij[1]])), ij[1], ij[0]))
            pairs.discard((i, j))
            li, lj = leads[i], leads[j]
            m = _lcm(li, lj)
            # product criterion
            if all(not (a and b) for a, b in zip(li, lj)):
                continue
            # chain criterion
            if any(
                k != i and k != j
                and _divides(leads[k], m)
                and (min(i, k), max(i, k)) not in pairs
                and (min(j, k), max(j, k)) not in pairs
                for k in range(len(basis))
            ):
                continue
            s = _spoly(basis[i], basis[j], li, lj)
            h = _reduce(s, basis, leads, key, counter, partial)
            if h:
                if _is_unit(h, one):
                    return GroebnerBasis(order, variables, (MultiPoly.constant(1, variables),), counter.steps)
                add(h)
    except BudgetExhausted as exc:
        exc.partial = partial()
        raise

    return GroebnerBasis(order, variables, _interreduce(basis, leads, key, variables, counter), counter.steps)


def _is_unit(h, one):
    return len(h) == 1 and one in h


def _interreduce(basis, leads, key, variables, counter):
    # minimal basis: drop elements whose lead is divisible by another's
    keep = []
    for i, li in enumerate(leads):
        dominated = False
        for j, lj in enumerate(leads):
            if i == j:
                continue
            if _divides(lj, li) and (lj != li or j < i):
                dominated = True
                break
        if not dominated:
            keep.append(i)
    minimal = [basis[i] for i in keep]
    mleads = [leads[i] for i in keep]
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        oleads = mleads[:idx] + mleads[idx + 1:]
        r = _monic(_reduce(g, others, oleads, key, counter), key)
        reduced.append(r)
    reduced.sort(key=lambda g: key(_lm(g, key)))
    return tuple(_as_multipoly(g, variables) for g in reduced)


def is_inconsistent(gb: GroebnerBasis) -> bool:
    """True iff the reduced basis is {1}: no common zero over any extension field."""
    return gb.is_unit()
