from fractions import Fraction

import pytest

from flagcurves import (
    FlagContext,
    LieElement,
    MultiPoly,
    NotNilpotent,
    ParseError,
    PolyMatrix,
    XNotInNilradical,
    adjoint,
    exp_mobius_cleared,
    exp_nilpotent,
    inverse,
    matrix_from_json,
)
from flagcurves.matrix import determinant, nilpotency_index

from gen import CASES, context, levi, nilradical, rational, unipotent_radical

t, s = MultiPoly.symbols("ts")
SL3 = FlagContext.borel(3)


def random_p(rng, ctx):
    """Factors (l, exp Z) of a random element of P."""
    return [levi(rng, ctx), exp_nilpotent(unipotent_radical(rng, ctx), 1)]


def test_context_positions():
    ctx = FlagContext(4, (2, 1, 1))
    assert ctx.block_of == (0, 0, 1, 2)
    assert (1, 0) in ctx.diag_block and (1, 0) not in ctx.below_block
    assert set(ctx.below_block) == {(2, 0), (2, 1), (3, 0), (3, 1), (3, 2)}
    assert len(ctx.above_block) == len(ctx.below_block)
    with pytest.raises(ValueError):
        FlagContext(3, (1, 1))


def test_exp_example():
    x = LieElement(SL3, [[0, 0, 0], [1, 0, 0], [1, 1, 0]])
    assert exp_nilpotent(x) == PolyMatrix([[1, 0, 0], [t, 1, 0], [t + t**2 / 2, t, 1]])


def test_not_nilpotent():
    with pytest.raises(NotNilpotent):
        exp_nilpotent(LieElement(SL3, [[0, -1, 0], [1, 0, 0], [0, 0, 0]]))


def test_one_parameter_subgroup_law(rng):
    for _ in range(CASES):
        ctx = context(rng)
        x = nilradical(rng, ctx)
        assert exp_nilpotent(x, "t") @ exp_nilpotent(x, "s") == exp_nilpotent(x, t + s)


def test_exp_has_unit_determinant(rng):
    for _ in range(CASES):
        ctx = context(rng)
        x = nilradical(rng, ctx)
        assert determinant(exp_nilpotent(x)) == 1
        assert nilpotency_index(x) <= len(ctx.blocks)


def test_ad_is_a_bracket_homomorphism(rng):
    for _ in range(CASES):
        ctx = context(rng)
        p = random_p(rng, ctx)
        x, y = nilradical(rng, ctx), LieElement(ctx, [[rational(rng, 2, 2) for _ in range(ctx.n)] for _ in range(ctx.n)])
        assert adjoint(p, x.bracket(y), ctx) == adjoint(p, x, ctx).bracket(adjoint(p, y, ctx))


def test_ad_is_a_group_action(rng):
    for _ in range(CASES):
        ctx = context(rng)
        p, q = random_p(rng, ctx), random_p(rng, ctx)
        x = nilradical(rng, ctx)
        # p + q concatenates factor lists, i.e. the group product pq
        assert adjoint(p + q, x, ctx) == adjoint(p, adjoint(q, x, ctx), ctx)


def test_inverse(rng):
    for _ in range(CASES):
        ctx = context(rng)
        p = random_p(rng, ctx)
        product = p[0].to_poly() @ p[1]
        assert product @ inverse(product, ctx) == PolyMatrix.identity(ctx.n)
        assert inverse(p, ctx) @ product == PolyMatrix.identity(ctx.n)


def test_mobius_cleared_at_sample_points(rng):
    # (t0+1)^(n-1) exp(-(t0/(t0+1)) Y), computed independently at each t0
    for _ in range(CASES):
        ctx = context(rng)
        y = nilradical(rng, ctx)
        t0 = rational(rng)
        if t0 == -1:
            continue
        expected = exp_nilpotent(y, -t0 / (t0 + 1)).scale((t0 + 1) ** (ctx.n - 1))
        assert exp_mobius_cleared(y, ctx).substitute({"t": t0}) == expected


def test_mobius_cleared_display():
    u, v, w = MultiPoly.symbols("uvw")
    y = PolyMatrix([[0, 0, 0], [u, 0, 0], [v, w, 0]])
    assert exp_mobius_cleared(y, SL3) == PolyMatrix([
        [(t + 1) ** 2, 0, 0],
        [-t * (t + 1) * u, (t + 1) ** 2, 0],
        [-t * (t + 1) * v + t**2 * u * w / 2, -t * (t + 1) * w, (t + 1) ** 2],
    ])


def test_mobius_rejects_non_nilradical():
    with pytest.raises(XNotInNilradical):
        exp_mobius_cleared(LieElement.unit(SL3, 1, 2), SL3)


def test_conjugation_identity():
    z = LieElement(SL3, [[0, 0, 0], [0, 0, -1], [0, 0, 0]])
    lhs = adjoint(exp_nilpotent(-z, 1), LieElement.unit(SL3, 3, 1), SL3)
    assert lhs == LieElement.unit(SL3, 2, 1) + LieElement.unit(SL3, 3, 1)


def test_subspace_membership():
    ctx = FlagContext(3, (2, 1))
    x = LieElement.unit(ctx, 3, 1)
    assert x.in_n() and not x.in_p()
    assert LieElement.unit(ctx, 2, 1).in_l()
    assert LieElement.unit(ctx, 1, 3).in_u()
    assert not LieElement.unit(ctx, 1, 1).in_sl()


def test_json_round_trip(rng):
    for _ in range(CASES):
        ctx = context(rng)
        x = nilradical(rng, ctx)
        assert matrix_from_json(x.to_json()) == x


@pytest.mark.parametrize("doc", [
    "not json",
    '{"entries": [[0]]}',
    '{"n": 2, "entries": [[0, 0]]}',
    '{"n": 2, "blocks": [1], "entries": [[0, 0], [0, 0]]}',
    '{"n": 2, "entries": [[0, 0], [0.5, 0]]}',
    '{"n": 2, "entries": [[0, 0], ["x", 0]]}',
    '[1, 2]',
])
def test_json_rejects(doc):
    with pytest.raises(ParseError):
        matrix_from_json(doc)


def test_json_accepts_fraction_strings():
    x = matrix_from_json('{"n": 2, "blocks": [1, 1], "entries": [["0", "0"], ["-3/4", "0"]]}')
    assert x[1, 0] == Fraction(-3, 4)
