"""Random generators shared by the property tests."""

from fractions import Fraction

from flagcurves import FlagContext, LieElement, MultiPoly, QuasiPoly

CASES = 200


def rational(rng, num=6, den=4):
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def nonzero_rational(rng, num=5, den=3):
    while True:
        q = rational(rng, num, den)
        if q:
            return q


def poly(rng, gens=("x", "y", "z"), terms=4, degree=3):
    out = {}
    for _ in range(rng.randint(0, terms)):
        exps = [0] * len(gens)
        for _ in range(rng.randint(0, degree)):
            exps[rng.randrange(len(gens))] += 1
        out[tuple(exps)] = rational(rng)
    return MultiPoly(gens, out)


def univariate(rng, var="x", degree=4):
    return MultiPoly.from_univariate([rational(rng) for _ in range(rng.randint(1, degree + 1))], var)


def context(rng, max_n=4):
    n = rng.randint(2, max_n)
    blocks, left = [], n
    while left:
        b = rng.randint(1, left)
        blocks.append(b)
        left -= b
    if len(blocks) == 1:
        blocks = [1] * n
    return FlagContext(n, tuple(blocks))


def nilradical(rng, ctx, density=0.7):
    vals = {
        (i, j): rational(rng, 3, 2) for i, j in ctx.below_block if rng.random() < density
    }
    return LieElement.from_entries(ctx, vals)


def nonzero_nilradical(rng, ctx):
    while True:
        x = nilradical(rng, ctx)
        if not x.is_zero():
            return x


def levi(rng, ctx):
    """Invertible block-diagonal rational matrix (triangular blocks keep it invertible)."""
    rows = [[Fraction(0)] * ctx.n for _ in range(ctx.n)]
    for block in ctx.block_ranges():
        upper = rng.random() < 0.5
        for i in block:
            rows[i][i] = nonzero_rational(rng, 3, 2)
            for j in block:
                # one triangle only, so the determinant is the diagonal product
                if i != j and (i < j) == upper and rng.random() < 0.5:
                    rows[i][j] = rational(rng, 3, 2)
    return LieElement(ctx, rows)


def unipotent_radical(rng, ctx):
    vals = {(i, j): rational(rng, 3, 2) for i, j in ctx.above_block if rng.random() < 0.6}
    return LieElement.from_entries(ctx, vals)


def quasipoly(rng, terms=3):
    q = QuasiPoly()
    for _ in range(rng.randint(1, terms)):
        k = rng.randint(0, 2)
        a = rng.choice([0, 0, 1, -1, Fraction(1, 2)])
        b = rng.choice([0, 1, 2, Fraction(1, 2)])
        kind = rng.choice(["one", "cos", "sin"])
        q = q + QuasiPoly({(k, a, b, kind): rational(rng)})
    return q
