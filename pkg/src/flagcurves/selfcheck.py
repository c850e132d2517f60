"""Every worked computation of the reparameterisation analysis, end to end.

``run_all`` returns one :class:`~flagcurves.lie1d.Report` per topic.  The
``paper-check`` CLI command prints them and exits non-zero on the first
failure.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .classify import (
    AFFINE_ONLY,
    PROJECTIVE,
    SL3,
    classify_curve,
    normal_form_matrix,
    reproduce_table,
    sl3_matrix,
    witness_annihilates_product,
)
from .criterion import build_criterion_system, substitute_witness
from .errors import NotNilpotent
from .groebner import DEFAULT_BUDGET
from .lie1d import Report, closure_suite, coordinate_change_suite, flow_identities, verify_ode_solutions
from .matrix import FlagContext, LieElement, PolyMatrix, adjoint, exp_mobius_cleared, exp_nilpotent, nilpotency_index
from .poly import MultiPoly
from .series import DEFAULT_ORDER


def exponential_checks() -> Report:
    rep = Report("exponentials of the nilradical")
    t = MultiPoly.var("t")
    x = sl3_matrix(1, 1, 1)
    expected = PolyMatrix([[1, 0, 0], [t, 1, 0], [t + t**2 / 2, t, 1]])
    rep.add("exp(t X), X = E21 + E31 + E32", exp_nilpotent(x) == expected, str(exp_nilpotent(x)).replace("\n", " "))
    p = LieElement(SL3, [[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    curve = p.to_poly() @ exp_nilpotent(LieElement.unit(SL3, 2, 1))
    rep.add("[[1,1,0],[0,1,0],[0,0,1]] exp(t E21) = [[1+t,1,0],[t,1,0],[0,0,1]]",
            curve == PolyMatrix([[1 + t, 1, 0], [t, 1, 0], [0, 0, 1]]))
    rotation = LieElement(SL3, [[0, -1, 0], [1, 0, 0], [0, 0, 0]])
    try:
        nilpotency_index(rotation)
        ok = False
    except NotNilpotent:
        ok = True
    rep.add("rotation generator is not nilpotent", ok)
    return rep


def criterion_checks(budget: int = DEFAULT_BUDGET) -> Report:
    rep = Report("criterion for the SL(3) examples")
    t = MultiPoly.var("t")
    u, v, w = MultiPoly.symbols("uvw")
    y = PolyMatrix([[0, 0, 0], [u, 0, 0], [v, w, 0]])
    displayed = PolyMatrix([
        [(t + 1) ** 2, 0, 0],
        [-t * (t + 1) * u, (t + 1) ** 2, 0],
        [-t * (t + 1) * v + t**2 * u * w / 2, -t * (t + 1) * w, (t + 1) ** 2],
    ])
    rep.add("(t+1)^2 exp(-(t/(t+1)) Y) matches the cleared display", exp_mobius_cleared(y, SL3) == displayed)

    e21 = LieElement.unit(SL3, 2, 1)
    system = build_criterion_system(SL3, e21)
    witness = dict(u=1, v=0, w=0, a=1, b=0, c=0)
    rep.add("u=1, v=w=0, a=1, b=c=0 solves the system for E21",
            all(r == 0 for r in substitute_witness(system, witness)))
    free_ok = all(
        all(r == 0 for r in substitute_witness(system, dict(witness, b=b, c=c)))
        for b, c in ((3, -2), (Fraction(1, 2), 7))
    )
    rep.add("b, c are free in that solution", free_ok)
    res = classify_curve(SL3, e21, budget)
    rep.add("E21 is projective", res.variant == PROJECTIVE and witness_annihilates_product(res),
            str(res.to_json().get("assignment", "")))
    res = classify_curve(SL3, sl3_matrix(1, 1, 1), budget)
    rep.add("E21 + E31 + E32 is affine-only with certificate {1}",
            res.variant == AFFINE_ONLY and res.certificate.is_unit())
    sl2 = FlagContext.borel(2)
    res = classify_curve(sl2, LieElement.unit(sl2, 2, 1), budget)
    rep.add("SL(2): E21 is projective with u = a = 1",
            res.variant == PROJECTIVE and res.assignment == {"u": 1, "a": 1})
    return rep


def conjugation_checks() -> Report:
    rep = Report("P-conjugation of rows 4-6")
    z = LieElement(SL3, [[0, 0, 0], [0, 0, -1], [0, 0, 0]])
    exp_minus_z = exp_nilpotent(-z, 1)
    lhs = adjoint(exp_minus_z, LieElement.unit(SL3, 3, 1), SL3)
    rep.add("(exp Z)^-1 E31 exp Z = E21 + E31 for Z = -E23", lhs == normal_form_matrix(4))
    return rep


def table_checks(budget: int = DEFAULT_BUDGET, expected=None) -> Report:
    rep = Report("table of normal forms")
    report = reproduce_table(budget, expected=expected)
    for e in report.rows:
        label = f"row {e.row_id}" + ("" if e.parameter is None else f", x = {e.parameter}")
        rep.add(f"{label}: {e.expected}", e.matches, f"computed {e.computed}")
    for c in report.coincidences:
        rep.add(f"rows {c.source} and {c.target} are P-conjugate", c.result.found)
    return rep


def invariance_spot_check(seed: int = 0, samples: int = 5, budget: int = DEFAULT_BUDGET) -> Report:
    rep = Report(f"L-invariance spot check (seed {seed})")
    rng = random.Random(seed)
    for row in range(1, 8):
        x = normal_form_matrix(row, 1) if row == 7 else normal_form_matrix(row)
        base = classify_curve(SL3, x, budget).variant
        ok = True
        for _ in range(samples):
            d1 = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3))
            d2 = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3))
            d = LieElement(SL3, [[d1, 0, 0], [0, d2, 0], [0, 0, 1 / (d1 * d2)]])
            ok &= classify_curve(SL3, adjoint(d, x), budget).variant == base
        rep.add(f"row {row}: classification unchanged under {samples} random diagonal conjugations", ok)
    return rep


def run_all(order: int = DEFAULT_ORDER, budget: int = DEFAULT_BUDGET, seed: int = 0, table_expected=None) -> list[Report]:
    return [
        exponential_checks(),
        criterion_checks(budget),
        conjugation_checks(),
        table_checks(budget, table_expected),
        invariance_spot_check(seed, budget=budget),
        closure_suite(),
        verify_ode_solutions(order=order),
        coordinate_change_suite(order=order),
        flow_identities(),
    ]
