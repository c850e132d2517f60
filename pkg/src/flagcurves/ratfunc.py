"""Quotients of polynomials, reduced as far as cheaply possible."""

from __future__ import annotations

from fractions import Fraction

from .poly import MultiPoly, exact_div, univariate_gcd, univariate_divmod, _coerce
from .series import TruncatedSeries


class RationalFunction:
    """numerator / denominator with a nonzero denominator.

    Univariate functions are reduced by a full gcd.  Multivariate ones get
    content normalisation and an exact-division attempt, nothing more.
    Equality is decided by cross-multiplication, so it does not depend on
    how far reduction went.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num, den = _coerce(num), _coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        num, den = _reduce(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    def __add__(self, other):
        other = _as_rf(other)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_as_rf(other))

    def __rsub__(self, other):
        return _as_rf(other) - self

    def __mul__(self, other):
        other = _as_rf(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_rf(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __pow__(self, k: int):
        return RationalFunction(self.num**k, self.den**k)

    def __eq__(self, other):
        try:
            other = _as_rf(other)
        except TypeError:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("RationalFunction is unhashable (equality is by cross-multiplication)")

    def derivative(self, var: str) -> "RationalFunction":
        return ratfunc_derivative(self, var)

    def substitute(self, bindings) -> "RationalFunction":
        den = self.den.substitute(bindings)
        if den.is_zero():
            raise ZeroDivisionError("substitution makes the denominator vanish")
        return RationalFunction(self.num.substitute(bindings), den)

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RationalFunction({str(self)!r})"


def _as_rf(value) -> RationalFunction:
    if isinstance(value, RationalFunction):
        return value
    return RationalFunction(_coerce(value))


def _reduce(num: MultiPoly, den: MultiPoly):
    gens = num.gens + tuple(g for g in den.gens if g not in num.gens)
    num, den = num.with_gens(gens), den.with_gens(gens)
    if num.is_zero():
        return num, MultiPoly.constant(1, gens)
    used = set(num.variables) | set(den.variables)
    if len(used) == 1:
        (v,) = used
        a, b = num.univariate_coeffs(v), den.univariate_coeffs(v)
        g = univariate_gcd(a, b)
        if len(g) > 1:
            a, _ = univariate_divmod(a, g)
            b, _ = univariate_divmod(b, g)
        num = MultiPoly.from_univariate(a, v).with_gens(gens)
        den = MultiPoly.from_univariate(b, v).with_gens(gens)
    elif not den.is_constant():
        q = exact_div(num, den)
        if q is not None:
            num, den = q.with_gens(gens), MultiPoly.constant(1, gens)
    lc = den.leading("grlex")[1]
    # fold the denominator's content into the numerator and make it positive-leading
    scale = den.content() * (1 if lc > 0 else -1)
    return num / scale, den / scale


def ratfunc_derivative(f: RationalFunction, var: str) -> RationalFunction:
    """Quotient rule, then reduce."""
    num, den = f.num, f.den
    if var not in num.gens:
        num = num.with_gens(num.gens + (var,))
    if var not in den.gens:
        den = den.with_gens(den.gens + (var,))
    return RationalFunction(
        num.derivative(var) * den - num * den.derivative(var),
        den * den,
    )


def ratfunc_series(f: RationalFunction, var: str, order: int):
    """Taylor expansion at 0 of a univariate rational function."""
    num = TruncatedSeries.from_coeffs(_padded(f.num, var), order, var)
    den = TruncatedSeries.from_coeffs(_padded(f.den, var), order, var)
    return num / den


def _padded(p: MultiPoly, var: str):
    if var not in p.gens:
        return [p.constant_value()] if p.terms else [Fraction(0)]
    return p.univariate_coeffs(var) or [Fraction(0)]
