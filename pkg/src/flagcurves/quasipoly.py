"""Exponential-trigonometric polynomials in one variable x.

A :class:`QuasiPoly` is a finite rational combination of the functions

    x^k e^{a x}            (kind "one")
    x^k e^{a x} cos(b x)   (kind "cos", b > 0)
    x^k e^{a x} sin(b x)   (kind "sin", b > 0)

with rational a, b.  These functions are linearly independent, so the term
dictionary is a canonical form and equality is dictionary equality.  The
class is closed under +, * (product-to-sum) and d/dx.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .rational import as_rational, parse_rational
from .series import TruncatedSeries, series_elementary

ONE, COS, SIN = "one", "cos", "sin"
_KIND_RANK = {ONE: 0, COS: 1, SIN: 2}


def _trig(kind, b):
    """Normalise kind(b x) to [(sign, kind, b >= 0)]; sin(0) disappears."""
    if kind == ONE:
        return [(1, ONE, Fraction(0))]
    if b == 0:
        return [(1, ONE, Fraction(0))] if kind == COS else []
    if b < 0:
        return [(-1 if kind == SIN else 1, kind, -b)]
    return [(1, kind, b)]


def _trig_product(k1, b1, k2, b2):
    """kind1(b1 x) * kind2(b2 x) as [(coeff, kind, freq)] before normalisation."""
    half = Fraction(1, 2)
    if k1 == ONE:
        return [(1, k2, b2)]
    if k2 == ONE:
        return [(1, k1, b1)]
    if k1 == COS and k2 == COS:
        return [(half, COS, b1 - b2), (half, COS, b1 + b2)]
    if k1 == SIN and k2 == SIN:
        return [(half, COS, b1 - b2), (-half, COS, b1 + b2)]
    if k1 == SIN and k2 == COS:
        return [(half, SIN, b1 + b2), (half, SIN, b1 - b2)]
    # cos * sin
    return [(half, SIN, b1 + b2), (-half, SIN, b1 - b2)]


def _sort_key(key):
    k, a, b, kind = key
    return (k, a, b, _KIND_RANK[kind])


class QuasiPoly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict = {}
        for (k, a, b, kind), c in (terms or {}).items():
            c = as_rational(c)
            if not c:
                continue
            if kind not in _KIND_RANK:
                raise ValueError(f"unknown trig kind {kind!r}")
            if int(k) < 0:
                raise ValueError("negative power of x")
            for sign, kd, bb in _trig(kind, as_rational(b)):
                key = (int(k), as_rational(a), bb, kd)
                clean[key] = clean.get(key, 0) + sign * c
        object.__setattr__(self, "terms", {key: c for key, c in clean.items() if c})

    def __setattr__(self, name, value):
        raise AttributeError("QuasiPoly is immutable")

    # constructors

    @classmethod
    def const(cls, c) -> "QuasiPoly":
        return cls({(0, 0, 0, ONE): c})

    @classmethod
    def monomial(cls, k: int = 1, coeff=1) -> "QuasiPoly":
        return cls({(k, 0, 0, ONE): coeff})

    @classmethod
    def exp(cls, a, coeff=1) -> "QuasiPoly":
        return cls({(0, as_rational(a), 0, ONE): coeff})

    @classmethod
    def cos(cls, b, coeff=1) -> "QuasiPoly":
        return cls({(0, 0, as_rational(b), COS): coeff})

    @classmethod
    def sin(cls, b, coeff=1) -> "QuasiPoly":
        return cls({(0, 0, as_rational(b), SIN): coeff})

    @classmethod
    def cosh(cls, b) -> "QuasiPoly":
        b = as_rational(b)
        half = Fraction(1, 2)
        return cls.exp(b, half) + cls.exp(-b, half)

    @classmethod
    def sinh(cls, b) -> "QuasiPoly":
        b = as_rational(b)
        half = Fraction(1, 2)
        return cls.exp(b, half) + cls.exp(-b, -half)

    @classmethod
    def from_polynomial(cls, coeffs) -> "QuasiPoly":
        return cls({(k, 0, 0, ONE): c for k, c in enumerate(coeffs)})

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, QuasiPoly):
            return other
        return QuasiPoly.const(as_rational(other))

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return QuasiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return QuasiPoly({key: -c for key, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QuasiPoly({key: c * other for key, c in self.terms.items()})
        other = self._coerce(other)
        out: dict = {}
        for (k1, a1, b1, t1), c1 in self.terms.items():
            for (k2, a2, b2, t2), c2 in other.terms.items():
                for w, kind, b in _trig_product(t1, b1, t2, b2):
                    for sign, kd, bb in _trig(kind, b):
                        key = (k1 + k2, a1 + a2, bb, kd)
                        out[key] = out.get(key, 0) + sign * w * c1 * c2
        return QuasiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = QuasiPoly.const(1)
        for _ in range(n):
            result = result * self
        return result

    def derivative(self) -> "QuasiPoly":
        out: dict = {}

        def add(key, c):
            out[key] = out.get(key, 0) + c

        for (k, a, b, kind), c in self.terms.items():
            if k:
                add((k - 1, a, b, kind), c * k)
            if a:
                add((k, a, b, kind), c * a)
            if kind == COS:
                add((k, a, b, SIN), -c * b)
            elif kind == SIN:
                add((k, a, b, COS), c * b)
        return QuasiPoly(out)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QuasiPoly.const(other)
        if not isinstance(other, QuasiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def compose_polynomial(self, coeffs) -> "QuasiPoly":
        """g(self) for the polynomial g with coefficients ``coeffs`` (low to high)."""
        result = QuasiPoly()
        for c in reversed(list(coeffs)):
            result = result * self + as_rational(c)
        return result

    def series(self, order: int, var: str = "x") -> TruncatedSeries:
        """Taylor series at 0, exact."""
        total = TruncatedSeries.constant(0, order, var)
        for (k, a, b, kind), c in self.terms.items():
            if k >= order:
                continue
            part = TruncatedSeries.from_coeffs([0] * k + [c], order, var)
            if a:
                part = part * series_elementary("exp", a, order, var)
            if kind != ONE:
                part = part * series_elementary(kind, b, order, var)
            total = total + part
        return total

    def keys(self):
        return sorted(self.terms, key=_sort_key)

    def __str__(self):
        if not self.terms:
            return "0"
        out = ""
        for i, key in enumerate(self.keys()):
            c = self.terms[key]
            factors = _factor_strings(key)
            mag = abs(c)
            if factors:
                body = "*".join(([str(mag)] if mag != 1 else []) + factors)
            else:
                body = str(mag)
            if i == 0:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def __repr__(self):
        return f"QuasiPoly({str(self)!r})"


def _arg(r: Fraction) -> str:
    if r == 1:
        return "x"
    if r == -1:
        return "-x"
    return f"{r} x"


def _factor_strings(key):
    k, a, b, kind = key
    out = []
    if k == 1:
        out.append("x")
    elif k > 1:
        out.append(f"x^{k}")
    if a:
        out.append(f"exp({_arg(a)})")
    if kind != ONE:
        out.append(f"{kind}({_arg(b)})")
    return out


_FUNC_RE = re.compile(r"(exp|sinh|cosh|sin|cos)\(\s*([^()]*?)\s*\)")
_X_RE = re.compile(r"x(?:\^(\d+))?")


def _parse_arg(text: str) -> Fraction:
    s = text.replace("*", " ").split()
    if not s or s[-1] not in ("x", "-x"):
        raise ParseError(f"function argument must be 'r x', got {text!r}")
    sign = -1 if s[-1] == "-x" else 1
    if len(s) == 1:
        return Fraction(sign)
    if len(s) == 2:
        return sign * parse_rational(s[0])
    raise ParseError(f"bad function argument {text!r}")


def _parse_factor(f: str) -> QuasiPoly:
    m = _FUNC_RE.fullmatch(f)
    if m:
        name, arg = m.group(1), _parse_arg(m.group(2))
        return getattr(QuasiPoly, name)(arg)
    m = _X_RE.fullmatch(f)
    if m:
        return QuasiPoly.monomial(int(m.group(1) or 1))
    return QuasiPoly.const(parse_rational(f))


def _split_top(text: str, seps: str):
    """Split at separator characters outside parentheses, keeping the separator."""
    parts, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced parentheses in {text!r}")
        if depth == 0 and ch in seps:
            parts.append(cur)
            cur = ch
        else:
            cur += ch
    if depth:
        raise ParseError(f"unbalanced parentheses in {text!r}")
    parts.append(cur)
    return parts


def parse_quasipoly(text: str) -> QuasiPoly:
    """Parse sums of products of rationals, x^k, exp/sin/cos/sinh/cosh(r x)."""
    s = text.strip()
    if not s:
        raise ParseError("empty expression")
    total = QuasiPoly()
    for chunk in _split_top(s, "+-"):
        chunk = chunk.strip()
        if not chunk:
            continue
        sign = 1
        if chunk[0] in "+-":
            sign = -1 if chunk[0] == "-" else 1
            chunk = chunk[1:].strip()
        if not chunk:
            raise ParseError(f"dangling sign in {text!r}")
        term = QuasiPoly.const(sign)
        for f in _split_top(chunk, "*"):
            f = f.lstrip("*").strip()
            if not f:
                raise ParseError(f"empty factor in {text!r}")
            term = term * _parse_factor(f)
        total = total + term
    return total
