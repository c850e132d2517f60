"""Rational scalars and their text format.

Rationals are plain :class:`fractions.Fraction` values.  The text grammar
accepted everywhere in this package is deliberately narrower than what
``Fraction()`` accepts: an optional sign, a decimal integer, and an optional
``/`` followed by a positive decimal integer.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError

_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/\d+)?")


def parse_rational(text: str) -> Fraction:
    """Parse ``"-3/8"``, ``"0"``, ``"+2"`` into a Fraction."""
    if not isinstance(text, str):
        raise ParseError(f"expected a rational string, got {type(text).__name__}")
    s = text.strip()
    if not _RATIONAL_RE.fullmatch(s):
        raise ParseError(f"not a rational: {text!r}")
    if "/" in s:
        num, den = s.split("/")
        if int(den) == 0:
            raise ParseError(f"zero denominator: {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def format_rational(q) -> str:
    return str(Fraction(q))


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and rational strings; refuse floats."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def rational_cube_root(q: Fraction) -> Fraction | None:
    """Exact cube root of q if it is rational, else None."""
    q = Fraction(q)
    if q == 0:
        return Fraction(0)
    sign = -1 if q < 0 else 1
    num = _icbrt(abs(q.numerator))
    den = _icbrt(q.denominator)
    if num is None or den is None:
        return None
    return sign * Fraction(num, den)


def _icbrt(n: int) -> int | None:
    lo, hi = 0, 1
    while hi**3 < n:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**3 < n:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo**3 == n else None
