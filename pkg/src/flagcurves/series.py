"""Truncated power series with exact rational coefficients.

A series of order N stores the Taylor coefficients of degrees 0..N-1.
Coefficients of degree >= N are unknown, not zero, so every operation
truncates to the smallest order among its operands.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .errors import SeriesDomainError
from .rational import as_rational

DEFAULT_ORDER = 24


class TruncatedSeries:
    __slots__ = ("var", "coeffs")

    def __init__(self, coeffs, var: str = "x"):
        coeffs = tuple(as_rational(c) for c in coeffs)
        if not coeffs:
            raise ValueError("series order must be at least 1")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def from_coeffs(cls, coeffs, order: int, var: str = "x"):
        """Pad or cut a coefficient list to exactly ``order`` entries."""
        c = list(coeffs)[:order]
        c += [0] * (order - len(c))
        return cls(c, var)

    @classmethod
    def constant(cls, c, order: int, var: str = "x"):
        return cls.from_coeffs([c], order, var)

    @classmethod
    def identity(cls, order: int, var: str = "x"):
        return cls.from_coeffs([0, 1], order, var)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[:order], self.var)

    def _pair(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.constant(as_rational(other), self.order, self.var)
        n = min(self.order, other.order)
        return self.coeffs[:n], other.coeffs[:n], n

    def __add__(self, other):
        a, b, _ = self._pair(other)
        return TruncatedSeries([x + y for x, y in zip(a, b)], self.var)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        a, b, _ = self._pair(other)
        return TruncatedSeries([x - y for x, y in zip(a, b)], self.var)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([c * other for c in self.coeffs], self.var)
        a, b, n = self._pair(other)
        out = [Fraction(0)] * n
        for i, x in enumerate(a):
            if x:
                for j in range(n - i):
                    out[i + j] += x * b[j]
        return TruncatedSeries(out, self.var)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        a, b, n = self._pair(other)
        if not b[0]:
            raise SeriesDomainError("series division needs a nonzero constant term")
        out = []
        for k in range(n):
            s = a[k] - sum(out[j] * b[k - j] for j in range(k))
            out.append(s / b[0])
        return TruncatedSeries(out, self.var)

    def __pow__(self, k: int):
        result = TruncatedSeries.constant(1, self.order, self.var)
        for _ in range(k):
            result = result * self
        return result

    def derivative(self) -> "TruncatedSeries":
        """Term-wise derivative; the order drops by one."""
        if self.order < 2:
            raise ValueError("derivative of an order-1 series has order 0")
        return TruncatedSeries([k * c for k, c in enumerate(self.coeffs)][1:], self.var)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if c:
                mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
                if not mono:
                    parts.append(str(c))
                else:
                    parts.append(mono if c == 1 else f"{c}*{mono}")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O({self.var}^{self.order})"

    def __repr__(self):
        return f"TruncatedSeries({list(map(str, self.coeffs))}, var={self.var!r})"


def series_elementary(kind: str, scale=1, order: int = DEFAULT_ORDER, var: str = "x") -> TruncatedSeries:
    """Taylor series at 0 of ``kind(scale * x)``.

    ``kind`` is one of exp, sin, cos, sinh, cosh, tan, tanh.  tan and tanh
    are obtained by series division.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    s = as_rational(scale)
    if kind in ("tan", "tanh"):
        base = "" if kind == "tan" else "h"
        return series_elementary("sin" + base, s, order, var) / series_elementary(
            "cos" + base, s, order, var
        )
    coeffs = []
    for k in range(order):
        c = s**k / factorial(k)
        if kind == "exp":
            coeffs.append(c)
        elif kind == "sinh":
            coeffs.append(c if k % 2 else Fraction(0))
        elif kind == "cosh":
            coeffs.append(Fraction(0) if k % 2 else c)
        elif kind == "sin":
            coeffs.append((-1) ** (k // 2) * c if k % 2 else Fraction(0))
        elif kind == "cos":
            coeffs.append(Fraction(0) if k % 2 else (-1) ** (k // 2) * c)
        else:
            raise ValueError(f"unknown elementary function {kind!r}")
    return TruncatedSeries(coeffs, var)


def series_compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """Series of outer(inner(x)); inner must vanish at 0."""
    if inner.coeffs[0]:
        raise SeriesDomainError("inner series must have zero constant term")
    n = min(outer.order, inner.order)
    inner = inner.truncate(n)
    result = TruncatedSeries.constant(outer.coeffs[n - 1], n, inner.var)
    for c in reversed(outer.coeffs[: n - 1]):
        result = result * inner + c
    return result
