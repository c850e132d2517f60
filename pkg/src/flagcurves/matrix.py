"""Polynomial matrices and the block-parabolic structure of sl(n).

Matrices are numpy object arrays whose entries are :class:`MultiPoly`
(for :class:`PolyMatrix`) or :class:`~fractions.Fraction` (for
:class:`LieElement`).  numpy only supplies the container and ``@``; all
arithmetic is exact.

Conventions follow the block-upper-triangular parabolic: for a composition
``blocks`` of n, positions strictly below the diagonal blocks form the
nilradical n, positions strictly above them form u, and P is the group of
invertible block-upper-triangular matrices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import factorial
from typing import Iterable, Sequence

import numpy as np

from .errors import NotInvertible, NotNilpotent, ParseError, XNotInNilradical
from .poly import MultiPoly, _coerce
from .rational import as_rational, format_rational, parse_rational


@dataclass(frozen=True)
class FlagContext:
    n: int
    blocks: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(int(b) for b in self.blocks))
        if self.n < 2:
            raise ValueError("matrix size must be at least 2")
        if any(b <= 0 for b in self.blocks) or sum(self.blocks) != self.n:
            raise ValueError(f"blocks {self.blocks} are not a composition of {self.n}")

    @classmethod
    def borel(cls, n: int) -> "FlagContext":
        return cls(n, (1,) * n)

    @cached_property
    def block_of(self) -> tuple[int, ...]:
        out = []
        for k, size in enumerate(self.blocks):
            out += [k] * size
        return tuple(out)

    @cached_property
    def below_block(self) -> tuple[tuple[int, int], ...]:
        b = self.block_of
        return tuple((i, j) for i in range(self.n) for j in range(self.n) if b[i] > b[j])

    @cached_property
    def above_block(self) -> tuple[tuple[int, int], ...]:
        b = self.block_of
        return tuple((i, j) for i in range(self.n) for j in range(self.n) if b[i] < b[j])

    @cached_property
    def diag_block(self) -> tuple[tuple[int, int], ...]:
        b = self.block_of
        return tuple((i, j) for i in range(self.n) for j in range(self.n) if b[i] == b[j])

    @property
    def is_borel(self) -> bool:
        return all(b == 1 for b in self.blocks)

    def block_ranges(self):
        start = 0
        for size in self.blocks:
            yield range(start, start + size)
            start += size


def _object_array(rows, n=None, convert=lambda v: v) -> np.ndarray:
    rows = [list(r) for r in rows]
    size = len(rows)
    if n is not None and size != n:
        raise ValueError(f"expected {n} rows, got {size}")
    if any(len(r) != size for r in rows):
        raise ValueError("matrix must be square")
    arr = np.empty((size, size), dtype=object)
    for i, r in enumerate(rows):
        for j, v in enumerate(r):
            arr[i, j] = convert(v)
    arr.flags.writeable = False
    return arr


class PolyMatrix:
    """Square matrix of polynomials over one shared generator tuple."""

    __slots__ = ("entries",)

    def __init__(self, rows):
        if isinstance(rows, PolyMatrix):
            rows = rows.entries
        arr = _object_array(rows, convert=_coerce)
        gens: tuple = ()
        for p in arr.flat:
            gens = gens + tuple(g for g in p.gens if g not in gens)
        out = np.empty(arr.shape, dtype=object)
        for idx, p in np.ndenumerate(arr):
            out[idx] = p.with_gens(gens)
        out.flags.writeable = False
        object.__setattr__(self, "entries", out)

    def __setattr__(self, name, value):
        raise AttributeError("PolyMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "PolyMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int) -> "PolyMatrix":
        return cls([[0] * n for _ in range(n)])

    @property
    def size(self) -> int:
        return self.entries.shape[0]

    @property
    def gens(self) -> tuple[str, ...]:
        return self.entries[0, 0].gens

    def __getitem__(self, ij) -> MultiPoly:
        return self.entries[ij]

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __add__(self, other):
        other = as_poly_matrix(other)
        _check_sizes(self, other)
        return PolyMatrix(self.entries + other.entries)

    def __sub__(self, other):
        other = as_poly_matrix(other)
        _check_sizes(self, other)
        return PolyMatrix(self.entries - other.entries)

    def __neg__(self):
        return PolyMatrix(-self.entries)

    def scale(self, c) -> "PolyMatrix":
        c = _coerce(c)
        return PolyMatrix([[c * p for p in row] for row in self.entries])

    def __pow__(self, k: int) -> "PolyMatrix":
        result = PolyMatrix.identity(self.size)
        for _ in range(k):
            result = result @ self
        return result

    def __eq__(self, other):
        if not isinstance(other, (PolyMatrix, LieElement)):
            return NotImplemented
        other = as_poly_matrix(other)
        return self.size == other.size and all(
            a == b for a, b in zip(self.entries.flat, other.entries.flat)
        )

    __hash__ = None

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.entries.flat)

    def is_constant(self) -> bool:
        return all(p.is_constant() for p in self.entries.flat)

    def substitute(self, bindings) -> "PolyMatrix":
        return PolyMatrix([[p.substitute(bindings) for p in row] for row in self.entries])

    def map(self, fn) -> "PolyMatrix":
        return PolyMatrix([[fn(p) for p in row] for row in self.entries])

    def to_rational(self) -> np.ndarray:
        """Entries as Fractions; every entry must be constant."""
        return _object_array(
            [[p.constant_value() for p in row] for row in self.entries]
        )

    def rows(self) -> list[list[MultiPoly]]:
        return [list(r) for r in self.entries]

    def __str__(self):
        cells = [[str(p) for p in row] for row in self.entries]
        width = max(len(c) for row in cells for c in row)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)

    def __repr__(self):
        return f"PolyMatrix({[[str(p) for p in r] for r in self.entries]})"


class LieElement:
    """A rational n x n matrix together with the flag structure it lives in."""

    __slots__ = ("context", "entries")

    def __init__(self, context: FlagContext, rows):
        if isinstance(rows, LieElement):
            rows = rows.entries
        arr = _object_array(rows, context.n, as_rational)
        object.__setattr__(self, "context", context)
        object.__setattr__(self, "entries", arr)

    def __setattr__(self, name, value):
        raise AttributeError("LieElement is immutable")

    @classmethod
    def from_entries(cls, context: FlagContext, values: dict) -> "LieElement":
        """Build from a sparse {(i, j): value} map, 0-based indices."""
        rows = [[0] * context.n for _ in range(context.n)]
        for (i, j), v in values.items():
            rows[i][j] = v
        return cls(context, rows)

    @classmethod
    def unit(cls, context: FlagContext, i: int, j: int) -> "LieElement":
        """Elementary matrix E_ij with the usual 1-based indices."""
        return cls.from_entries(context, {(i - 1, j - 1): 1})

    @property
    def n(self) -> int:
        return self.context.n

    def __getitem__(self, ij) -> Fraction:
        return self.entries[ij]

    def _like(self, arr) -> "LieElement":
        return LieElement(self.context, arr)

    def __add__(self, other):
        return self._like(self.entries + _rational_array(other))

    def __sub__(self, other):
        return self._like(self.entries - _rational_array(other))

    def __neg__(self):
        return self._like(-self.entries)

    def __mul__(self, c):
        c = as_rational(c)
        return self._like(self.entries * c)

    __rmul__ = __mul__

    def __matmul__(self, other):
        return self._like(self.entries @ _rational_array(other))

    def __pow__(self, k: int):
        result = LieElement(self.context, np.identity(self.n, dtype=int).tolist())
        for _ in range(k):
            result = result @ self
        return result

    def bracket(self, other: "LieElement") -> "LieElement":
        return self @ other - other @ self

    def trace(self) -> Fraction:
        return sum((self.entries[i, i] for i in range(self.n)), Fraction(0))

    def is_zero(self) -> bool:
        return not any(self.entries.flat)

    def _zero_outside(self, allowed) -> bool:
        allowed = set(allowed)
        return all(
            not v or (i, j) in allowed for (i, j), v in np.ndenumerate(self.entries)
        )

    def in_n(self) -> bool:
        return self._zero_outside(self.context.below_block)

    def in_p(self) -> bool:
        return self._zero_outside(self.context.diag_block + self.context.above_block)

    def in_l(self) -> bool:
        return self._zero_outside(self.context.diag_block)

    def in_u(self) -> bool:
        return self._zero_outside(self.context.above_block)

    def in_sl(self) -> bool:
        return self.trace() == 0

    def to_poly(self) -> PolyMatrix:
        return PolyMatrix(self.entries)

    def __eq__(self, other):
        if isinstance(other, LieElement):
            return self.n == other.n and all(
                a == b for a, b in zip(self.entries.flat, other.entries.flat)
            )
        if isinstance(other, PolyMatrix):
            return other == self
        return NotImplemented

    def __hash__(self):
        return hash((self.context, tuple(self.entries.flat)))

    def to_json(self) -> dict:
        return matrix_to_json(self.entries, self.context)

    def __str__(self):
        cells = [[format_rational(v) for v in row] for row in self.entries]
        width = max(len(c) for row in cells for c in row)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)

    def __repr__(self):
        rows = [[format_rational(v) for v in row] for row in self.entries]
        return f"LieElement(blocks={self.context.blocks}, {rows})"


def _rational_array(m) -> np.ndarray:
    if isinstance(m, LieElement):
        return m.entries
    if isinstance(m, PolyMatrix):
        return m.to_rational()
    return _object_array(m, convert=as_rational)


def as_poly_matrix(m) -> PolyMatrix:
    if isinstance(m, PolyMatrix):
        return m
    if isinstance(m, LieElement):
        return m.to_poly()
    return PolyMatrix(m)


def _check_sizes(a, b):
    if a.size != b.size:
        raise ValueError(f"size mismatch: {a.size} vs {b.size}")


def mat_mul(a, b) -> PolyMatrix:
    a, b = as_poly_matrix(a), as_poly_matrix(b)
    _check_sizes(a, b)
    n = a.size
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            acc = MultiPoly.zero()
            for k in range(n):
                x, y = a.entries[i, k], b.entries[k, j]
                if x.terms and y.terms:
                    acc = acc + x * y
            out[i][j] = acc
    return PolyMatrix(out)


def determinant(m) -> MultiPoly:
    """Laplace expansion; meant for the small sizes used here."""
    m = as_poly_matrix(m)
    rows = m.rows()

    def det(rows):
        if len(rows) == 1:
            return rows[0][0]
        total = MultiPoly.zero()
        for j, p in enumerate(rows[0]):
            if p.terms:
                minor = [r[:j] + r[j + 1:] for r in rows[1:]]
                term = p * det(minor)
                total = total - term if j % 2 else total + term
        return total

    return det(rows)


def nilpotency_index(x) -> int:
    """Least k with x**k = 0; raises NotNilpotent if x**n != 0."""
    m = as_poly_matrix(x)
    n = m.size
    power = PolyMatrix.identity(n)
    for k in range(1, n + 1):
        power = power @ m
        if power.is_zero():
            return k
    raise NotNilpotent("matrix is not nilpotent (its n-th power is nonzero)")


def exp_nilpotent(x, scalar="t") -> PolyMatrix:
    """sum_j scalar^j x^j / j!, which terminates because x is nilpotent."""
    m = as_poly_matrix(x)
    s = MultiPoly.var(scalar) if isinstance(scalar, str) else _coerce(scalar)
    k = nilpotency_index(m)
    result = PolyMatrix.identity(m.size)
    power = PolyMatrix.identity(m.size)
    for j in range(1, k):
        power = power @ m
        result = result + power.scale(s**j / factorial(j))
    return result


def check_nilradical_pattern(y, ctx: FlagContext, t: str = "t") -> PolyMatrix:
    y = as_poly_matrix(y)
    if y.size != ctx.n:
        raise XNotInNilradical(f"expected a {ctx.n}x{ctx.n} matrix, got {y.size}x{y.size}")
    below = set(ctx.below_block)
    for (i, j), p in np.ndenumerate(y.entries):
        if (i, j) not in below and not p.is_zero():
            raise XNotInNilradical(f"entry ({i + 1},{j + 1}) must vanish for the nilradical")
        if t in p.variables:
            raise XNotInNilradical(f"entry ({i + 1},{j + 1}) involves the curve parameter {t!r}")
    return y


def exp_mobius_cleared(y, ctx: FlagContext, t: str = "t") -> PolyMatrix:
    """(t+1)^(n-1) * exp(-(t/(t+1)) y) as a polynomial matrix.

    Expanded as sum_j (-1)^j t^j (t+1)^(n-1-j) y^j / j!.  Valid because
    y**n = 0 for y in the nilradical.
    """
    y = check_nilradical_pattern(y, ctx, t)
    n = ctx.n
    tt = MultiPoly.var(t)
    result = PolyMatrix.zeros(n)
    power = PolyMatrix.identity(n)
    for j in range(n):
        if j:
            power = power @ y
            if power.is_zero():
                break
        weight = (-1) ** j * tt**j * (tt + 1) ** (n - 1 - j) / factorial(j)
        result = result + power.scale(weight)
    return result


def _is_unipotent(m: PolyMatrix):
    n = m.size
    nil = m - PolyMatrix.identity(n)
    power = nil
    for _ in range(n):
        if power.is_zero():
            return nil
        power = power @ nil
    return nil if power.is_zero() else None


def _rational_inverse(rows):
    n = len(rows)
    aug = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            raise NotInvertible("singular block")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [v / pv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _block_diagonal_inverse(m: PolyMatrix, ctx: FlagContext) -> PolyMatrix:
    diag = set(ctx.diag_block)
    for (i, j), p in np.ndenumerate(m.entries):
        if (i, j) not in diag and not p.is_zero():
            raise NotInvertible("not block-diagonal")
        if not p.is_constant():
            raise NotInvertible("block-diagonal inverse needs rational entries")
    out = [[Fraction(0)] * ctx.n for _ in range(ctx.n)]
    for rng in ctx.block_ranges():
        block = [[m.entries[i, j].constant_value() for j in rng] for i in rng]
        inv = _rational_inverse(block)
        for a, i in enumerate(rng):
            for b, j in enumerate(rng):
                out[i][j] = inv[a][b]
    return PolyMatrix(out)


def inverse(p, ctx: FlagContext | None = None) -> PolyMatrix:
    """Exact inverse of a unipotent or block-diagonal matrix, or a product.

    ``p`` may be a sequence of factors.  A rational block-upper-triangular
    matrix is split as (block-diagonal) x (unipotent) when ``ctx`` is known.
    """
    if isinstance(p, (list, tuple)):
        result = None
        for factor in p:
            inv = inverse(factor, ctx)
            result = inv if result is None else inv @ result
        if result is None:
            raise ValueError("empty factor list")
        return result
    if isinstance(p, LieElement):
        ctx = ctx or p.context
    m = as_poly_matrix(p)
    nil = _is_unipotent(m)
    if nil is not None:
        result = PolyMatrix.identity(m.size)
        power = PolyMatrix.identity(m.size)
        while True:
            power = power @ (-nil)
            if power.is_zero():
                return result
            result = result + power
    if ctx is None:
        ctx = FlagContext(m.size, (m.size,)) if m.is_constant() else None
    if ctx is None:
        raise NotInvertible("matrix is neither unipotent nor a supported product")
    if any(not m.entries[i, j].is_zero() for i, j in ctx.below_block):
        raise NotInvertible("matrix is not block-upper-triangular")
    levi = PolyMatrix(
        [[m.entries[i, j] if (i, j) in set(ctx.diag_block) else 0 for j in range(ctx.n)] for i in range(ctx.n)]
    )
    levi_inv = _block_diagonal_inverse(levi, ctx)
    unip = levi_inv @ m
    if _is_unipotent(unip) is None:
        raise NotInvertible("could not split into Levi and unipotent factors")
    return inverse(unip, ctx) @ levi_inv


def _product(p) -> PolyMatrix:
    if isinstance(p, (list, tuple)):
        result = as_poly_matrix(p[0])
        for factor in p[1:]:
            result = result @ factor
        return result
    return as_poly_matrix(p)


def adjoint(p, x, ctx: FlagContext | None = None):
    """Ad_p x = p x p^-1, exactly.

    Returns a LieElement when x is one and the result is rational.
    """
    if ctx is None and isinstance(x, LieElement):
        ctx = x.context
    pm = _product(p)
    result = pm @ as_poly_matrix(x) @ inverse(p, ctx)
    if isinstance(x, LieElement) and result.is_constant():
        return LieElement(x.context, result.to_rational())
    return result


def below_block_entries(m, ctx: FlagContext) -> list[MultiPoly]:
    m = as_poly_matrix(m)
    if m.size != ctx.n:
        raise ValueError(f"size mismatch: {m.size} vs {ctx.n}")
    return [m.entries[i, j] for i, j in ctx.below_block]


# JSON interface

def matrix_to_json(entries, ctx: FlagContext) -> dict:
    return {
        "n": ctx.n,
        "blocks": list(ctx.blocks),
        "entries": [[format_rational(v) for v in row] for row in entries],
    }


def matrix_from_json(obj) -> LieElement:
    """Parse ``{"n": int, "blocks": [...], "entries": [[...]]}``."""
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise ParseError("matrix JSON must be an object")
    try:
        n = obj["n"]
        entries = obj["entries"]
    except KeyError as exc:
        raise ParseError(f"matrix JSON missing key {exc}") from None
    blocks = obj.get("blocks", [1] * n if isinstance(n, int) else None)
    if not isinstance(n, int) or isinstance(n, bool):
        raise ParseError("'n' must be an integer")
    if not isinstance(blocks, list) or not all(isinstance(b, int) for b in blocks):
        raise ParseError("'blocks' must be a list of integers")
    if not isinstance(entries, list) or len(entries) != n or any(
        not isinstance(r, list) or len(r) != n for r in entries
    ):
        raise ParseError(f"'entries' must be an {n}x{n} array")
    try:
        ctx = FlagContext(n, tuple(blocks))
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    rows = []
    for r in entries:
        row = []
        for v in r:
            if isinstance(v, int) and not isinstance(v, bool):
                row.append(Fraction(v))
            else:
                row.append(parse_rational(v))
        rows.append(row)
    return LieElement(ctx, rows)


def symbolic_matrix(n: int, positions: Iterable[tuple[int, int]], names: Sequence[str], diagonal=0) -> PolyMatrix:
    """Matrix with fresh unknowns at ``positions`` and ``diagonal`` on the diagonal."""
    rows = [[diagonal if i == j else 0 for j in range(n)] for i in range(n)]
    for (i, j), name in zip(positions, names):
        rows[i][j] = MultiPoly.var(name)
    return PolyMatrix(rows)
