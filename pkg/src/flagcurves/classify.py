"""Projective vs affine classification of distinguished curves.

``classify_curve`` builds the criterion system for a generator X of the
nilradical and hands it to the solver.  A rational witness means the curve
t -> exp(tX) mod P admits a projective reparameterisation; a Groebner
certificate {1} means only affine ones exist.  Solver failures are reported
as ``undetermined`` and never promoted to ``affine-only``.

The SL(3)/Borel helpers normalise X under the diagonal (Levi) subgroup,
search for conjugating elements of P, and rebuild the seven-row table of
normal forms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .criterion import CriterionSystem, build_criterion_system, substitute_witness
from .errors import XNotInNilradical, XZero
from .groebner import DEFAULT_BUDGET, GroebnerBasis
from .matrix import (
    FlagContext,
    LieElement,
    PolyMatrix,
    adjoint,
    below_block_entries,
    exp_nilpotent,
    matrix_to_json,
    symbolic_matrix,
    determinant,
)
from .poly import MultiPoly
from .rational import as_rational, rational_cube_root
from .solver import INCONSISTENT, WITNESS, SolveOutcome, find_rational_witness, solve_system

PROJECTIVE = "projective"
AFFINE_ONLY = "affine-only"
UNDETERMINED = "undetermined"


@dataclass
class ClassificationResult:
    variant: str
    system: CriterionSystem
    y: LieElement | None = None
    r: LieElement | None = None
    assignment: dict | None = None
    certificate: GroebnerBasis | None = None
    reason: str | None = None

    def witness_residuals(self) -> list[Fraction]:
        return substitute_witness(self.system, self.assignment)

    def to_json(self) -> dict:
        out: dict = {"status": self.variant}
        if self.variant == PROJECTIVE:
            out["Y"] = self.y.to_json()["entries"]
            out["r"] = self.r.to_json()["entries"]
            out["assignment"] = {k: str(v) for k, v in self.assignment.items()}
        elif self.variant == AFFINE_ONLY:
            out["certificate"] = self.certificate.to_strings()
        else:
            out["reason"] = self.reason
        return out


def classify_curve(ctx: FlagContext, x: LieElement, budget: int = DEFAULT_BUDGET) -> ClassificationResult:
    system = build_criterion_system(ctx, x)
    outcome = find_rational_witness(system, budget)
    if outcome.status == WITNESS:
        a = outcome.assignment
        y = LieElement(ctx, system.y_matrix(a).to_rational())
        r = LieElement(ctx, system.r_matrix(a).to_rational())
        return ClassificationResult(PROJECTIVE, system, y=y, r=r, assignment=a)
    if outcome.status == INCONSISTENT:
        return ClassificationResult(AFFINE_ONLY, system, certificate=outcome.certificate)
    return ClassificationResult(UNDETERMINED, system, reason=outcome.reason)


def witness_annihilates_product(result: ClassificationResult) -> bool:
    """Every below-block entry of the cleared product vanishes at the witness."""
    product = result.system.cleared_product(result.assignment)
    return all(p.is_zero() for p in below_block_entries(product, result.system.context))


# SL(3), Borel: normal forms under the diagonal subgroup

SL3 = FlagContext.borel(3)

# row id -> (X21, X31, X32); row 7 is the family (1, x, 1) with x != 0
NORMAL_FORMS = {
    1: (1, 0, 0),
    2: (0, 0, 1),
    3: (1, 0, 1),
    4: (1, 1, 0),
    5: (0, 1, 1),
    6: (0, 1, 0),
}
EXPECTED = {1: PROJECTIVE, 2: PROJECTIVE, 3: PROJECTIVE, 4: PROJECTIVE, 5: PROJECTIVE, 6: PROJECTIVE, 7: AFFINE_ONLY}
ROW7_SAMPLES = (Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2))


def sl3_matrix(a, b, c) -> LieElement:
    """Strictly lower triangular element with (X21, X31, X32) = (a, b, c)."""
    return LieElement(SL3, [[0, 0, 0], [a, 0, 0], [b, c, 0]])


def normal_form_matrix(row_id: int, x=None) -> LieElement:
    if row_id == 7:
        if x is None or as_rational(x) == 0:
            raise ValueError("row 7 needs a nonzero parameter x")
        return sl3_matrix(1, x, 1)
    return sl3_matrix(*NORMAL_FORMS[row_id])


@dataclass(frozen=True)
class NormalFormRow:
    row_id: int
    parameter: Fraction | None
    transform: LieElement
    normal_form: LieElement


def sl3_normal_form(x: LieElement) -> NormalFormRow:
    """Row of the table whose normal form is L-conjugate to x, with the diagonal doing it.

    The transform d satisfies Ad_d x = normal form.  Rows 3, 4, 5 and 7 need a
    cube root to reach det d = 1 in general; there d is the rational
    representative with d1 = 1 (scalar matrices act trivially, so the real
    det-1 rescaling acts identically).  When det d is a rational cube it is
    rescaled to det 1.
    """
    x = LieElement(SL3, x.entries)
    if x.is_zero():
        raise XZero()
    if not x.in_n():
        raise XNotInNilradical("X must be strictly lower triangular")
    a, b, c = x[1, 0], x[2, 0], x[2, 1]
    one = Fraction(1)
    param = None
    if a and c:
        param = b / (a * c)
        row = 3 if param == 0 else 7
        d = (one, 1 / a, 1 / (a * c))
    elif a and not b and not c:
        row, d = 1, (one, 1 / a, a)
    elif c and not a and not b:
        row, d = 2, (c, one, 1 / c)
    elif a and b:
        row, d = 4, (one, 1 / a, 1 / b)
    elif b and c:
        row, d = 5, (one, c / b, 1 / b)
    else:
        row, d = 6, (one, b, 1 / b)
    det = d[0] * d[1] * d[2]
    root = rational_cube_root(det)
    if root is not None and root != 1:
        d = tuple(v / root for v in d)
    transform = LieElement(SL3, [[d[0], 0, 0], [0, d[1], 0], [0, 0, d[2]]])
    nf = normal_form_matrix(row, param) if row == 7 else normal_form_matrix(row)
    return NormalFormRow(row, param, transform, nf)


# conjugacy under P

@dataclass
class ConjugacyResult:
    status: str  # found | none | undetermined
    levi: LieElement | None = None
    z: LieElement | None = None
    p: LieElement | None = None
    outcome: SolveOutcome | None = None

    @property
    def found(self) -> bool:
        return self.status == "found"

    def to_json(self) -> dict:
        out: dict = {"status": self.status}
        if self.found:
            out["levi"] = self.levi.to_json()["entries"]
            out["Z"] = self.z.to_json()["entries"]
            out["p"] = self.p.to_json()["entries"]
        elif self.outcome is not None:
            out["solver"] = self.outcome.to_json()
        return out


def p_conjugacy_search(ctx: FlagContext, x1: LieElement, x2: LieElement, budget: int = DEFAULT_BUDGET) -> ConjugacyResult:
    """Look for p = l exp(Z) in P with Ad_p x1 = x2.

    l is a symbolic block-diagonal matrix made invertible by an auxiliary
    unknown s with s det(l) = 1, and Z runs over the above-block positions.
    The equations are the entries of p x1 - x2 p.
    """
    x1 = LieElement(ctx, x1.entries)
    x2 = LieElement(ctx, x2.entries)
    n = ctx.n
    l_names = [f"l{i + 1}{j + 1}" for i, j in ctx.diag_block]
    z_names = [f"z{i + 1}{j + 1}" for i, j in ctx.above_block]
    unknowns = l_names + ["s"] + z_names
    levi = symbolic_matrix(n, ctx.diag_block, l_names)
    z = symbolic_matrix(n, ctx.above_block, z_names)
    p = levi @ exp_nilpotent(z, 1)
    lhs = p @ x1.to_poly() - x2.to_poly() @ p
    equations = [e for e in lhs.entries.flat if not e.is_zero()]
    equations.append(MultiPoly.var("s") * determinant(levi) - 1)
    outcome = solve_system(equations, unknowns, budget)
    if outcome.status == WITNESS:
        a = outcome.assignment
        lv = LieElement(ctx, levi.substitute(a).to_rational())
        zv = LieElement(ctx, z.substitute(a).to_rational())
        expz = LieElement(ctx, exp_nilpotent(zv, 1).to_rational())
        pv = lv @ expz
        if adjoint([lv, expz], x1, ctx) == x2:
            return ConjugacyResult("found", lv, zv, pv, outcome)
        return ConjugacyResult("undetermined", outcome=outcome)
    if outcome.status == INCONSISTENT:
        return ConjugacyResult("none", outcome=outcome)
    return ConjugacyResult("undetermined", outcome=outcome)


# the table

@dataclass
class TableEntry:
    row_id: int
    parameter: Fraction | None
    normal_form: LieElement
    expected: str
    result: ClassificationResult

    @property
    def computed(self) -> str:
        return self.result.variant

    @property
    def matches(self) -> bool:
        return self.computed == self.expected

    def to_json(self) -> dict:
        r = self.result
        if r.variant == PROJECTIVE:
            evidence = {"Y": r.to_json()["Y"], "r": r.to_json()["r"]}
        elif r.variant == AFFINE_ONLY:
            evidence = {"certificate": r.certificate.to_strings()}
        else:
            evidence = {"reason": r.reason}
        return {
            "rowId": self.row_id,
            "parameter": None if self.parameter is None else str(self.parameter),
            "normalForm": self.normal_form.to_json()["entries"],
            "expected": self.expected,
            "computed": self.computed,
            "witnessOrCertificate": evidence,
        }


@dataclass
class Coincidence:
    source: int
    target: int
    result: ConjugacyResult

    def to_json(self) -> dict:
        return {"from": self.source, "to": self.target, **self.result.to_json()}


@dataclass
class TableReport:
    rows: list[TableEntry] = field(default_factory=list)
    coincidences: list[Coincidence] = field(default_factory=list)

    @property
    def all_match(self) -> bool:
        return all(e.matches for e in self.rows) and all(c.result.found for c in self.coincidences)

    def to_json(self) -> dict:
        return {
            "rows": [e.to_json() for e in self.rows],
            "coincidences": [c.to_json() for c in self.coincidences],
            "allMatch": self.all_match,
        }


COINCIDENCE_PAIRS = ((6, 4), (6, 5), (4, 5))


def reproduce_table(budget: int = DEFAULT_BUDGET, row7_samples=ROW7_SAMPLES, expected=None) -> TableReport:
    """Classify every normal form and check the P-coincidence of rows 4-6.

    ``expected`` overrides the reference column (used to check that a
    mismatch is reported).
    """
    expected = {**EXPECTED, **(expected or {})}
    report = TableReport()
    for row_id in range(1, 7):
        nf = normal_form_matrix(row_id)
        report.rows.append(TableEntry(row_id, None, nf, expected[row_id], classify_curve(SL3, nf, budget)))
    for x in row7_samples:
        x = as_rational(x)
        nf = normal_form_matrix(7, x)
        report.rows.append(TableEntry(7, x, nf, expected[7], classify_curve(SL3, nf, budget)))
    for src, dst in COINCIDENCE_PAIRS:
        res = p_conjugacy_search(SL3, normal_form_matrix(src), normal_form_matrix(dst), budget)
        report.coincidences.append(Coincidence(src, dst, res))
    return report


def render_table(report) -> str:
    """Aligned text rendering of a table report or of its JSON form."""
    data = report.to_json() if isinstance(report, TableReport) else report
    lines = [f"{'row':>3}  {'x':>5}  {'(X21,X31,X32)':<15} {'expected':<12} {'computed':<12} ok"]
    for e in data["rows"]:
        nf = e["normalForm"]
        triple = f"({nf[1][0]},{nf[2][0]},{nf[2][1]})"
        x = e["parameter"] or ""
        ok = "yes" if e["expected"] == e["computed"] else "NO"
        lines.append(f"{e['rowId']:>3}  {x:>5}  {triple:<15} {e['expected']:<12} {e['computed']:<12} {ok}")
    for c in data["coincidences"]:
        detail = f"  p = {c['p']}" if "p" in c else ""
        lines.append(f"rows {c['from']} -> {c['to']} P-conjugate: {c['status']}{detail}")
    lines.append("all rows match" if data["allMatch"] else "MISMATCH")
    return "\n".join(lines)
