"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`MultiPoly` is a map from exponent vectors to nonzero Fractions over
an ordered tuple of generator names.  Binary operations between polynomials
over different generator tuples merge the tuples by name (left operand's
names first), so ``MultiPoly.var("x") + MultiPoly.var("y")`` just works.

The string format is a sum of terms ``coeff*sym^k*...``; the parser also
accepts the usual shorthand (``-u + 1``, ``t^2*u``, ``3/2``).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import ParseError
from .rational import as_rational, parse_rational


def lex_key(exps):
    return exps


def grlex_key(exps):
    return (sum(exps), exps)


def grevlex_key(exps):
    return (sum(exps), tuple(-e for e in reversed(exps)))


ORDERS = {"lex": lex_key, "grlex": grlex_key, "grevlex": grevlex_key}


def _coerce(value) -> "MultiPoly":
    if isinstance(value, MultiPoly):
        return value
    return MultiPoly.constant(as_rational(value))


class MultiPoly:
    """Immutable sparse polynomial over Q."""

    __slots__ = ("gens", "terms")

    def __init__(self, gens: Iterable[str] = (), terms: Mapping | None = None):
        gens = tuple(gens)
        if len(set(gens)) != len(gens):
            raise ValueError(f"repeated generator in {gens}")
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(gens) or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for generators {gens}")
            c = as_rational(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
        object.__setattr__(self, "gens", gens)
        object.__setattr__(self, "terms", {e: c for e, c in clean.items() if c})

    @classmethod
    def _raw(cls, gens, terms):
        # trusted constructor: terms already canonical
        p = object.__new__(cls)
        object.__setattr__(p, "gens", gens)
        object.__setattr__(p, "terms", terms)
        return p

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    @classmethod
    def constant(cls, c, gens: Iterable[str] = ()) -> "MultiPoly":
        gens = tuple(gens)
        c = as_rational(c)
        return cls._raw(gens, {(0,) * len(gens): c} if c else {})

    @classmethod
    def zero(cls, gens: Iterable[str] = ()) -> "MultiPoly":
        return cls._raw(tuple(gens), {})

    @classmethod
    def var(cls, name: str, gens: Iterable[str] | None = None) -> "MultiPoly":
        gens = (name,) if gens is None else tuple(gens)
        if name not in gens:
            raise ValueError(f"{name!r} not among generators {gens}")
        exps = tuple(1 if g == name else 0 for g in gens)
        return cls._raw(gens, {exps: Fraction(1)})

    @classmethod
    def symbols(cls, names: Iterable[str]) -> tuple["MultiPoly", ...]:
        gens = tuple(names)
        return tuple(cls.var(g, gens) for g in gens)

    # ring plumbing

    def with_gens(self, gens: Iterable[str]) -> "MultiPoly":
        """Re-embed into a ring over ``gens``; every used variable must be present."""
        gens = tuple(gens)
        if gens == self.gens:
            return self
        index = {g: i for i, g in enumerate(gens)}
        slots = []
        for i, g in enumerate(self.gens):
            if g in index:
                slots.append((i, index[g]))
            elif any(e[i] for e in self.terms):
                raise ValueError(f"variable {g!r} is used but missing from {gens}")
        out = {}
        for exps, c in self.terms.items():
            new = [0] * len(gens)
            for i, j in slots:
                new[j] = exps[i]
            out[tuple(new)] = c
        return MultiPoly._raw(gens, out)

    def _unify(self, other: "MultiPoly"):
        if self.gens == other.gens:
            return self.gens, self.terms, other.terms
        gens = self.gens + tuple(g for g in other.gens if g not in self.gens)
        return gens, self.with_gens(gens).terms, other.with_gens(gens).terms

    @property
    def variables(self) -> tuple[str, ...]:
        """Generators that actually occur, in ring order."""
        return tuple(
            g for i, g in enumerate(self.gens) if any(e[i] for e in self.terms)
        )

    def drop_unused(self) -> "MultiPoly":
        return self.with_gens(self.variables)

    # predicates

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return next(iter(self.terms.values()), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.gens), Fraction(0))

    # arithmetic

    def __neg__(self):
        return MultiPoly._raw(self.gens, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        gens, a, b = self._unify(other)
        out = dict(a)
        for e, c in b.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly._raw(gens, out)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            c = Fraction(other)
            if not c:
                return MultiPoly.zero(self.gens)
            return MultiPoly._raw(self.gens, {e: c * v for e, v in self.terms.items()})
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        gens, a, b = self._unify(other)
        out: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, 0) + ca * cb
        return MultiPoly._raw(gens, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        # division by a scalar only; see exact_div for polynomial divisors
        if isinstance(other, MultiPoly):
            if not other.is_constant():
                raise TypeError("use exact_div for division by a polynomial")
            other = other.constant_value()
        c = as_rational(other)
        if not c:
            raise ZeroDivisionError("polynomial divided by zero")
        return self * (1 / c)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = MultiPoly.constant(1, self.gens)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # comparison

    def _named(self):
        return frozenset(
            (tuple((g, k) for g, k in zip(self.gens, e) if k), c)
            for e, c in self.terms.items()
        )

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = MultiPoly.constant(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if self.gens == other.gens:
            return self.terms == other.terms
        return self._named() == other._named()

    def __hash__(self):
        return hash(self._named())

    # structure

    def _index(self, var: str) -> int:
        try:
            return self.gens.index(var)
        except ValueError:
            raise KeyError(f"unknown variable {var!r}; ring is {self.gens}") from None

    def degree(self, var: str | None = None) -> int:
        """Degree in ``var`` (total degree if omitted); -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        i = self._index(var)
        return max(e[i] for e in self.terms)

    def leading(self, order: str = "grlex"):
        """(exponents, coefficient) of the leading term under ``order``."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=ORDERS[order])
        return e, self.terms[e]

    def coefficients_in(self, var: str) -> list["MultiPoly"]:
        """[c0, ..., cd] with self = sum c_i * var**i and each c_i free of var."""
        i = self._index(var)
        d = self.degree(var)
        buckets: list[dict] = [{} for _ in range(max(d, 0) + 1)]
        for e, c in self.terms.items():
            k = e[i]
            buckets[k][e[:i] + (0,) + e[i + 1:]] = c
        return [MultiPoly._raw(self.gens, b) for b in buckets]

    def substitute(self, bindings: Mapping[str, object]) -> "MultiPoly":
        """Replace generators by rationals or polynomials; unknown names are ignored."""
        idx = [(i, g) for i, g in enumerate(self.gens) if g in bindings]
        if not idx:
            return self
        values = {g: _coerce(bindings[g]) for _, g in idx}
        bound = {i for i, _ in idx}
        rest_gens = tuple(g for i, g in enumerate(self.gens) if i not in bound)
        cache: dict = {}

        def power(g, k):
            key = (g, k)
            if key not in cache:
                cache[key] = values[g] ** k
            return cache[key]

        result = MultiPoly.zero(rest_gens)
        # group terms by the bound part of the exponent
        groups: dict = {}
        for e, c in self.terms.items():
            bpart = tuple(e[i] for i, _ in idx)
            rpart = tuple(k for j, k in enumerate(e) if j not in bound)
            groups.setdefault(bpart, {})[rpart] = c
        for bpart, rterms in groups.items():
            factor = MultiPoly.constant(1)
            for (i, g), k in zip(idx, bpart):
                if k:
                    factor = factor * power(g, k)
            result = result + factor * MultiPoly._raw(rest_gens, rterms)
        return result.with_gens(_merged(self.gens, result.gens))

    def evaluate(self, bindings: Mapping[str, object]) -> Fraction:
        """Full evaluation at rationals; every used variable must be bound."""
        missing = [g for g in self.variables if g not in bindings]
        if missing:
            raise KeyError(f"no value for {missing}")
        vals = [as_rational(bindings[g]) if g in bindings else Fraction(0) for g in self.gens]
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for v, k in zip(vals, e):
                if k:
                    term *= v**k
            total += term
        return total

    def derivative(self, var: str) -> "MultiPoly":
        i = self._index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                out[e[:i] + (e[i] - 1,) + e[i + 1:]] = c * e[i]
        return MultiPoly._raw(self.gens, out)

    def content(self) -> Fraction:
        """Positive rational c such that self / c has coprime integer coefficients."""
        from math import gcd, lcm

        if not self.terms:
            return Fraction(0)
        g = 0
        m = 1
        for c in self.terms.values():
            g = gcd(g, c.numerator)
            m = lcm(m, c.denominator)
        return Fraction(g, m)

    def monic(self, order: str = "grlex") -> "MultiPoly":
        if not self.terms:
            return self
        return self / self.leading(order)[1]

    def univariate_coeffs(self, var: str) -> list[Fraction]:
        """Rational coefficients low-to-high; self must involve only ``var``."""
        others = [g for g in self.variables if g != var]
        if others:
            raise ValueError(f"{self} is not univariate in {var!r}")
        if var not in self.gens:
            return [self.constant_value()] if self.terms else []
        return [c.constant_value() for c in self.coefficients_in(var)] if self.terms else []

    @classmethod
    def from_univariate(cls, coeffs, var: str) -> "MultiPoly":
        return cls((var,), {(k,): c for k, c in enumerate(coeffs) if c})

    # text

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=grlex_key, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                g if k == 1 else f"{g}^{k}" for g, k in zip(self.gens, e) if k
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"MultiPoly({str(self)!r}, gens={self.gens})"


def _merged(a, b):
    return tuple(a) + tuple(g for g in b if g not in a)


def poly_arith(lhs, rhs, op: str) -> MultiPoly:
    """Exact ``lhs op rhs`` for op in add|sub|mul."""
    lhs, rhs = _coerce(lhs), _coerce(rhs)
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    raise ValueError(f"unknown op {op!r}")


def coefficients_in(p: MultiPoly, var: str) -> list[MultiPoly]:
    return p.coefficients_in(var)


def poly_substitute(p: MultiPoly, bindings: Mapping[str, object]) -> MultiPoly:
    return p.substitute(bindings)


def exact_div(p: MultiPoly, q: MultiPoly) -> MultiPoly | None:
    """Quotient p/q if q divides p exactly, else None (multivariate division, lex)."""
    p, q = _coerce(p), _coerce(q)
    if q.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    gens, pt, qt = p._unify(q)
    lq, cq = max(qt.items(), key=lambda kv: lex_key(kv[0]))
    rem = dict(pt)
    quot: dict = {}
    while rem:
        le = max(rem, key=lex_key)
        if any(a < b for a, b in zip(le, lq)):
            return None
        shift = tuple(a - b for a, b in zip(le, lq))
        c = rem[le] / cq
        quot[shift] = quot.get(shift, 0) + c
        for e, v in qt.items():
            k = tuple(a + b for a, b in zip(e, shift))
            s = rem.get(k, 0) - c * v
            if s:
                rem[k] = s
            else:
                rem.pop(k, None)
    return MultiPoly._raw(gens, {e: c for e, c in quot.items() if c})


def univariate_divmod(a: list, b: list) -> tuple[list, list]:
    """Long division of coefficient lists (low-to-high, Fractions)."""
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    r = _trim(list(a))
    q = [Fraction(0)] * max(len(r) - len(b) + 1, 0)
    lead = b[-1]
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        c = r[-1] / lead
        q[shift] = c
        for i, v in enumerate(b):
            r[shift + i] -= c * v
        r = _trim(r)
    return _trim(q), r


def univariate_gcd(a: list, b: list) -> list:
    """Monic gcd of two coefficient lists."""
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = univariate_divmod(a, b)
        a, b = b, r
    if not a:
        return []
    return [c / a[-1] for c in a]


def _trim(c):
    c = [Fraction(x) for x in c]
    while c and not c[-1]:
        c.pop()
    return c


_TERM_SPLIT = re.compile(r"\s*([+-])\s*")
_FACTOR_RE = re.compile(r"([A-Za-z_][A-Za-z_0-9]*)(?:\^(\d+))?")


def parse_poly(text: str, gens: Iterable[str] | None = None) -> MultiPoly:
    """Parse the ``coeff*sym^k*...`` sum-of-terms format."""
    s = text.strip()
    if not s:
        raise ParseError("empty polynomial string")
    if s[0] not in "+-":
        s = "+" + s
    pieces = _TERM_SPLIT.split(s)
    # split yields ['', sign, term, sign, term, ...]
    if pieces[0].strip():
        raise ParseError(f"cannot parse polynomial {text!r}")
    result = MultiPoly.zero(() if gens is None else gens)
    for sign, term in zip(pieces[1::2], pieces[2::2]):
        term = term.strip()
        if not term:
            raise ParseError(f"empty term in {text!r}")
        coeff = Fraction(1)
        mono: dict[str, int] = {}
        for factor in term.split("*"):
            factor = factor.strip()
            if not factor:
                raise ParseError(f"empty factor in {text!r}")
            if factor[0].isdigit():
                coeff *= parse_rational(factor)
                continue
            m = _FACTOR_RE.fullmatch(factor)
            if not m:
                raise ParseError(f"bad factor {factor!r} in {text!r}")
            mono[m.group(1)] = mono.get(m.group(1), 0) + int(m.group(2) or 1)
        if sign == "-":
            coeff = -coeff
        names = tuple(mono)
        result = result + MultiPoly(names, {tuple(mono[g] for g in names): coeff})
    if gens is not None:
        gens = tuple(gens)
        result = result.with_gens(_merged(gens, result.gens))
    return result
