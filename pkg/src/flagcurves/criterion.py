"""Polynomial system for the projective-reparameterisation criterion.

For a generator X of the nilradical we ask for Y in n and r in U with

    exp(-(t/(t+1)) Y) . r . exp(tX)  in P   for every t.

After multiplying by (t+1)^(n-1) the left side is a polynomial matrix E(t);
membership in P says its below-block entries vanish identically, i.e. every
t-coefficient of every below-block entry is zero.  Those coefficients,
polynomials in the entries of Y and r, are the equations.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .errors import ParseError, XNotInNilradical, XZero
from .matrix import (
    FlagContext,
    LieElement,
    PolyMatrix,
    below_block_entries,
    exp_mobius_cleared,
    exp_nilpotent,
    symbolic_matrix,
)
from .poly import MultiPoly, parse_poly
from .rational import as_rational

T = "t"
_Y_NAMES = "uvw"
_R_NAMES = "abc"


def unknown_names(ctx: FlagContext) -> tuple[list[str], list[str]]:
    """Names for the entries of Y (below-block) and r (above-block).

    Small cases reuse the letters u, v, w and a, b, c; larger ones use
    y<i><j> and r<i><j> with 1-based indices.
    """
    below, above = ctx.below_block, ctx.above_block
    if len(below) <= len(_Y_NAMES) and len(above) <= len(_R_NAMES):
        return list(_Y_NAMES[: len(below)]), list(_R_NAMES[: len(above)])
    sep = "_" if ctx.n > 9 else ""
    ys = [f"y{i + 1}{sep}{j + 1}" for i, j in below]
    rs = [f"r{i + 1}{sep}{j + 1}" for i, j in above]
    return ys, rs


@dataclass(frozen=True)
class CriterionSystem:
    context: FlagContext
    generator: LieElement
    y_unknowns: tuple[str, ...]
    r_unknowns: tuple[str, ...]
    equations: tuple[MultiPoly, ...]

    @property
    def unknowns(self) -> tuple[str, ...]:
        return self.y_unknowns + self.r_unknowns

    def y_matrix(self, assignment=None) -> PolyMatrix:
        m = symbolic_matrix(self.context.n, self.context.below_block, self.y_unknowns)
        return m.substitute(assignment) if assignment else m

    def r_matrix(self, assignment=None) -> PolyMatrix:
        m = symbolic_matrix(self.context.n, self.context.above_block, self.r_unknowns, diagonal=1)
        return m.substitute(assignment) if assignment else m

    def cleared_product(self, assignment=None) -> PolyMatrix:
        """E(t), optionally with unknowns already replaced by values."""
        return cleared_product(
            self.context, self.generator, self.y_matrix(assignment), self.r_matrix(assignment)
        )

    def to_json(self) -> dict:
        return {
            "unknowns": list(self.unknowns),
            "equations": [str(p) for p in self.equations],
        }


def cleared_product(ctx: FlagContext, x: LieElement, y: PolyMatrix, r: PolyMatrix) -> PolyMatrix:
    return exp_mobius_cleared(y, ctx, T) @ r @ exp_nilpotent(x, T)


def _check_generator(ctx: FlagContext, x: LieElement):
    if x.n != ctx.n:
        raise XNotInNilradical(f"X is {x.n}x{x.n} but the flag context has n = {ctx.n}")
    if x.is_zero():
        raise XZero()
    if not LieElement(ctx, x.entries).in_n():
        raise XNotInNilradical("X has entries outside the strictly lower block positions")


def build_criterion_system(ctx: FlagContext, x: LieElement) -> CriterionSystem:
    _check_generator(ctx, x)
    x = LieElement(ctx, x.entries)
    ys, rs = unknown_names(ctx)
    gens = tuple(ys) + tuple(rs)
    y = symbolic_matrix(ctx.n, ctx.below_block, ys)
    r = symbolic_matrix(ctx.n, ctx.above_block, rs, diagonal=1)
    product = cleared_product(ctx, x, y, r)
    equations: list[MultiPoly] = []
    seen = set()
    for entry in below_block_entries(product, ctx):
        if entry.is_zero():
            continue
        for c in entry.coefficients_in(T):
            if c.is_zero():
                continue
            c = c.with_gens(gens + (T,)).with_gens(gens)
            if c not in seen:
                seen.add(c)
                equations.append(c)
    return CriterionSystem(ctx, x, tuple(ys), tuple(rs), tuple(equations))


def substitute_witness(system: CriterionSystem, assignment: Mapping[str, object]) -> list[Fraction]:
    """Residual of each equation at a full assignment of the unknowns."""
    missing = [u for u in system.unknowns if u not in assignment]
    if missing:
        raise KeyError(f"assignment is missing {missing}")
    values = {k: as_rational(v) for k, v in assignment.items()}
    return [p.evaluate(values) for p in system.equations]


def system_from_json(obj) -> tuple[list[str], list[MultiPoly]]:
    """Read ``{"unknowns": [...], "equations": [...]}`` back into polynomials."""
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
    try:
        unknowns = list(obj["unknowns"])
        eqs = [parse_poly(s, unknowns) for s in obj["equations"]]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad criterion system JSON: {exc}") from None
    for p in eqs:
        extra = set(p.variables) - set(unknowns)
        if extra:
            raise ParseError(f"equation {p} uses undeclared symbols {sorted(extra)}")
    return unknowns, [p.with_gens(unknowns) for p in eqs]
