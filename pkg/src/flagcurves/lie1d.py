"""Lie algebras of vector fields f(x) d/dx on the line.

Vector fields with quasi-polynomial coefficients are handled exactly.
Identities that involve tan or tanh, which are not quasi-polynomial, are
checked as equalities of exact Taylor coefficients up to a chosen order.

The report functions (``verify_ode_solutions``, ``verify_coord_change``,
``flow_identities``, ``closure_suite``) return a :class:`Report`, a list of
named pass/fail checks that serialises to JSON.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .matrix import PolyMatrix
from .poly import MultiPoly
from .quasipoly import QuasiPoly, parse_quasipoly
from .ratfunc import RationalFunction
from .rational import as_rational
from .series import DEFAULT_ORDER, TruncatedSeries, series_compose, series_elementary

LAMBDAS = (Fraction(1), Fraction(2), Fraction(1, 2))


@dataclass(frozen=True)
class VectorField1D:
    """coeff(x) d/dx."""

    coeff: QuasiPoly

    @classmethod
    def parse(cls, text: str) -> "VectorField1D":
        text = text.strip()
        for suffix in ("d/dx", "∂"):
            if text.endswith(suffix):
                text = text[: -len(suffix)].strip().rstrip("*").strip()
                if text.startswith("(") and text.endswith(")"):
                    text = text[1:-1]
                break
        return cls(parse_quasipoly(text))

    def __add__(self, other):
        return VectorField1D(self.coeff + other.coeff)

    def __sub__(self, other):
        return VectorField1D(self.coeff - other.coeff)

    def __neg__(self):
        return VectorField1D(-self.coeff)

    def scale(self, c) -> "VectorField1D":
        return VectorField1D(self.coeff * as_rational(c))

    def is_zero(self) -> bool:
        return self.coeff.is_zero()

    def __str__(self):
        return f"({self.coeff}) d/dx"


def field_of(expr) -> VectorField1D:
    if isinstance(expr, VectorField1D):
        return expr
    if isinstance(expr, QuasiPoly):
        return VectorField1D(expr)
    if isinstance(expr, str):
        return VectorField1D.parse(expr)
    return VectorField1D(QuasiPoly.const(expr))


DX = VectorField1D(QuasiPoly.const(1))


def bracket(f: VectorField1D, g: VectorField1D) -> VectorField1D:
    """[f d/dx, g d/dx] = (f g' - g f') d/dx."""
    a, b = f.coeff, g.coeff
    return VectorField1D(a * b.derivative() - b * a.derivative())


def _solve_exact(columns: list[dict], target: dict):
    """Rational solution c of sum_j c_j columns[j] = target, or None.

    Columns and target are sparse {coordinate: value} maps.  Free
    coefficients are set to zero.
    """
    coords = sorted({k for col in columns for k in col} | set(target), key=repr)
    m = len(columns)
    rows = [[Fraction(col.get(k, 0)) for col in columns] + [Fraction(target.get(k, 0))] for k in coords]
    pivots = []
    r = 0
    for c in range(m):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pv = rows[r][c]
        rows[r] = [v / pv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if any(row[m] for row in rows[r:]):
        return None
    sol = [Fraction(0)] * m
    for i, c in enumerate(pivots):
        sol[c] = rows[i][m]
    return sol


def span_membership(f: VectorField1D, basis: Sequence[VectorField1D]):
    """Coefficients expressing f in span(basis), or None if f is outside it."""
    return _solve_exact([b.coeff.terms for b in basis], f.coeff.terms)


def span_dimension(basis: Sequence[VectorField1D]) -> int:
    dim = 0
    kept: list[VectorField1D] = []
    for b in basis:
        if b.is_zero() or (kept and span_membership(b, kept) is not None):
            continue
        kept.append(b)
        dim += 1
    return dim


@dataclass
class ClosureResult:
    closed: bool
    dimension: int
    counterexample: tuple | None = None  # (j, i, [basis[j], basis[i]]) with j > i, 0-based

    def __bool__(self):
        return self.closed


def check_closure(basis: Sequence) -> ClosureResult:
    basis = [field_of(b) for b in basis]
    if not basis:
        raise ValueError("basis must be nonempty")
    dim = span_dimension(basis)
    for j in range(1, len(basis)):
        for i in range(j):
            br = bracket(basis[j], basis[i])
            if span_membership(br, basis) is None:
                return ClosureResult(False, dim, (j, i, br))
    return ClosureResult(True, dim)


def listed_algebras(lam) -> list[tuple[str, list[VectorField1D]]]:
    """The six finite-dimensional algebras containing d/dx, in the classical order."""
    lam = as_rational(lam)
    q = QuasiPoly
    return [
        ("span{d}", [DX]),
        ("span{d, exp(lx) d}", [DX, VectorField1D(q.exp(lam))]),
        ("span{d, x d}", [DX, VectorField1D(q.monomial(1))]),
        ("span{d, sin(lx) d, cos(lx) d}", [DX, VectorField1D(q.sin(lam)), VectorField1D(q.cos(lam))]),
        ("span{d, x d, x^2 d}", [DX, VectorField1D(q.monomial(1)), VectorField1D(q.monomial(2))]),
        ("span{d, sinh(lx) d, cosh(lx) d}", [DX, VectorField1D(q.sinh(lam)), VectorField1D(q.cosh(lam))]),
    ]


LISTED_DIMENSIONS = (1, 2, 2, 3, 3, 3)


# reports

@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)

    def add(self, name, passed, detail=""):
        self.checks.append(Check(name, bool(passed), detail))

    def extend(self, other: "Report"):
        self.checks.extend(other.checks)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.passed), None)

    def to_json(self) -> dict:
        return {"title": self.title, "passed": self.passed, "checks": [c.to_json() for c in self.checks]}

    def render(self) -> str:
        lines = [self.title]
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            lines.append(f"  [{mark}] {c.name}" + (f"  ({c.detail})" if c.detail else ""))
        return "\n".join(lines)


def closure_suite(lambdas=LAMBDAS) -> Report:
    rep = Report("closure of the listed algebras")
    for lam in lambdas:
        for (name, basis), dim in zip(listed_algebras(lam), LISTED_DIMENSIONS):
            res = check_closure(basis)
            rep.add(f"{name}, l={lam}", res.closed and res.dimension == dim, f"dim {res.dimension}")
    res = check_closure([DX, VectorField1D(QuasiPoly.monomial(2))])
    expected = VectorField1D(QuasiPoly.monomial(1, -2))
    ok = not res.closed and res.counterexample is not None and res.counterexample[2] == expected
    rep.add("span{d, x^2 d} is not closed", ok,
            f"[x^2 d, d] = {res.counterexample[2] if res.counterexample else None}")
    return rep


def second_order_solutions(lam) -> list[tuple[str, QuasiPoly, Fraction]]:
    """(label, g, nu) with g'' = 2 + nu g and g = x^2 + O(x^4)."""
    lam = as_rational(lam)
    k = 2 / lam**2
    return [
        ("(2/l^2)(1 - cos lx)", (QuasiPoly.const(1) - QuasiPoly.cos(lam)) * k, -lam**2),
        ("x^2", QuasiPoly.monomial(2), Fraction(0)),
        ("(2/l^2)(cosh lx - 1)", (QuasiPoly.cosh(lam) - 1) * k, lam**2),
    ]


FIRST_ORDER_CONSTANTS = ((Fraction(1), Fraction(0)), (Fraction(2), Fraction(-3)), (Fraction(-1, 2), Fraction(5)))


def verify_ode_solutions(lambdas=LAMBDAS, order: int = DEFAULT_ORDER) -> Report:
    rep = Report("ODE solutions")
    for lam in lambdas:
        lam = as_rational(lam)
        for c, d in FIRST_ORDER_CONSTANTS:
            g = QuasiPoly.exp(lam, c) + d
            mu = -lam * d
            rep.add(f"g = {c} e^({lam}x) + {d} solves g' = mu + l g, mu = {mu}",
                    g.derivative() - mu - g * lam == 0)
        for label, g, nu in second_order_solutions(lam):
            residual = g.derivative().derivative() - 2 - g * nu
            rep.add(f"g = {label}, l={lam} solves g'' = 2 + nu g, nu = {nu}", residual == 0,
                    "" if residual == 0 else f"residual {residual}")
            s = g.series(max(order, 5))
            rep.add(f"g = {label}, l={lam} expands as x^2 + 0 x^3 + ...",
                    s[0] == 0 and s[1] == 0 and s[2] == 1 and s[3] == 0,
                    f"{s.truncate(5)}")
            rep.add(f"span{{d, g d, g' d}} closed for g = {label}, l={lam}",
                    check_closure([DX, VectorField1D(g), VectorField1D(g.derivative())]).closed)
    for mu, c in ((Fraction(3), Fraction(1)), (Fraction(-1, 2), Fraction(0))):
        g = QuasiPoly.monomial(1, mu) + c
        rep.add(f"g = {mu} x + {c} solves g' = mu (l = 0)", g.derivative() == mu)
    return rep


# coordinate changes

@dataclass(frozen=True)
class CoordChange:
    """y = phi(x): exp change (1 - e^{-l x})/l, tan(l x / 2) or tanh(l x / 2)."""

    kind: str
    lam: Fraction
    order: int = DEFAULT_ORDER

    def __post_init__(self):
        object.__setattr__(self, "lam", as_rational(self.lam))
        if self.kind not in ("exp", "tan", "tanh"):
            raise ValueError(f"unknown coordinate change {self.kind!r}")
        if self.lam == 0:
            raise ValueError("lambda must be nonzero")

    def forward_exact(self) -> QuasiPoly:
        if self.kind != "exp":
            raise ValueError("only the exponential change is quasi-polynomial")
        return (QuasiPoly.const(1) - QuasiPoly.exp(-self.lam)) * (1 / self.lam)

    def forward_series(self, order: int) -> TruncatedSeries:
        if self.kind == "exp":
            return self.forward_exact().series(order)
        return series_elementary(self.kind, self.lam / 2, order)

    def claims(self) -> list[tuple[str, QuasiPoly, list[Fraction]]]:
        """(label, f(x), g(y) coefficients) for each f(x) d/dx = g(y) d/dy."""
        lam, half = self.lam, self.lam / 2
        q = QuasiPoly
        if self.kind == "exp":
            return [
                ("exp(lx) d/dx = d/dy", q.exp(lam), [Fraction(1)]),
                ("d/dx = (1 - l y) d/dy", q.const(1), [Fraction(1), -lam]),
            ]
        if self.kind == "tan":
            return [
                ("d/dx = (l/2)(1 + y^2) d/dy", q.const(1), [half, 0, half]),
                ("sin(lx) d/dx = l y d/dy", q.sin(lam), [0, lam]),
                ("cos(lx) d/dx = (l/2)(1 - y^2) d/dy", q.cos(lam), [half, 0, -half]),
            ]
        return [
            ("d/dx = (l/2)(1 - y^2) d/dy", q.const(1), [half, 0, -half]),
            ("sinh(lx) d/dx = l y d/dy", q.sinh(lam), [0, lam]),
            ("cosh(lx) d/dx = (l/2)(1 + y^2) d/dy", q.cosh(lam), [half, 0, half]),
        ]


def pushforward_holds_series(change: CoordChange, f: QuasiPoly, g_coeffs, order: int) -> bool:
    """f(x) phi'(x) == g(phi(x)) as Taylor coefficients of degree < order."""
    phi = change.forward_series(order + 1)
    lhs = f.series(order) * phi.derivative()
    g = TruncatedSeries.from_coeffs(g_coeffs, order)
    rhs = series_compose(g, phi.truncate(order))
    return lhs == rhs


def pushforward_holds_exact(change: CoordChange, f: QuasiPoly, g_coeffs) -> bool:
    phi = change.forward_exact()
    return f * phi.derivative() == phi.compose_polynomial(g_coeffs)


def verify_coord_change(change: CoordChange) -> Report:
    if change.order < 8:
        raise ValueError("series checks need order >= 8")
    rep = Report(f"{change.kind} change, l={change.lam}, order {change.order}")
    rep.add("phi(0) = 0", change.forward_series(2)[0] == 0)
    for label, f, g in change.claims():
        if change.kind == "exp":
            rep.add(f"{label} (exact)", pushforward_holds_exact(change, f, g))
        rep.add(f"{label} (series)", pushforward_holds_series(change, f, g, change.order))
    rep.add("zero field maps to zero", pushforward_holds_series(change, QuasiPoly(), [0], change.order))
    return rep


def coordinate_change_suite(lambdas=LAMBDAS, order: int = DEFAULT_ORDER) -> Report:
    rep = Report("coordinate changes")
    for kind in ("exp", "tan", "tanh"):
        for lam in lambdas:
            sub = verify_coord_change(CoordChange(kind, lam, order))
            for c in sub.checks:
                rep.add(f"{sub.title}: {c.name}", c.passed, c.detail)
    return rep


# flows of the nilpotent local forms

def _poly_bracket(f: MultiPoly, g: MultiPoly, x: str = "x") -> MultiPoly:
    fx = f.with_gens(f.gens + ((x,) if x not in f.gens else ()))
    gx = g.with_gens(g.gens + ((x,) if x not in g.gens else ()))
    return fx * gx.derivative(x) - gx * fx.derivative(x)


def sl2_adjoint_matrix(n: MultiPoly, x: str = "x") -> PolyMatrix:
    """Matrix of ad_n on the basis d, x d, x^2 d (coefficient polynomials in x)."""
    xs = MultiPoly.var(x)
    basis = [MultiPoly.constant(1), xs, xs**2]
    cols = []
    for h in basis:
        br = _poly_bracket(n, h, x)
        if x in br.gens and br.degree(x) > 2:
            raise ValueError(f"{n} d/dx is not in span{{d, x d, x^2 d}}")
        cs = br.coefficients_in(x) if x in br.gens else [br]
        cols.append([cs[k] if k < len(cs) else MultiPoly.zero() for k in range(3)])
    return PolyMatrix([[cols[j][i] for j in range(3)] for i in range(3)])


FLOW_SAMPLES = ((1, 1), (2, 0), (0, 3), (-1, 2), (Fraction(1, 2), Fraction(-3, 4)))


def flow_identities(samples=FLOW_SAMPLES) -> Report:
    rep = Report("flows of nilpotent fields")
    p, q, t, a, x = MultiPoly.symbols(["p", "q", "t", "a", "x"])
    proj = RationalFunction(p**2 * t, 1 + p * q * t)
    rhs = (RationalFunction(p) - RationalFunction(q) * proj) ** 2
    rep.add("x = p^2 t/(1 + p q t) solves x' = (p - q x)^2 (symbolic p, q)", proj.derivative("t") == rhs)
    rep.add("x' = p^2/(1 + p q t)^2", proj.derivative("t") == RationalFunction(p**2, (1 + p * q * t) ** 2))
    rep.add("x(0) = 0", proj.substitute({"t": 0}) == 0)
    for ps, qs in samples:
        ps, qs = as_rational(ps), as_rational(qs)
        xs = proj.substitute({"p": ps, "q": qs})
        ok = xs.derivative("t") == (RationalFunction(ps) - xs * qs) ** 2 and xs.substitute({"t": 0}) == 0
        rep.add(f"projective flow at p={ps}, q={qs}", ok, str(xs))
    deg = proj.substitute({"q": 0})
    rep.add("q = 0 degenerates to the affine flow x = p^2 t", deg == RationalFunction(p**2 * t))
    aff = RationalFunction(a * t)
    rep.add("x = a t solves x' = a", aff.derivative("t") == RationalFunction(a) and aff.substitute({"t": 0}) == 0)

    field_poly = (p - q * x) ** 2
    ad = sl2_adjoint_matrix(field_poly)
    rep.add("ad of (p - q x)^2 d is nilpotent on span{d, x d, x^2 d}", (ad @ ad @ ad).is_zero())
    for h in (MultiPoly.constant(1), x, x**2):
        twice = _poly_bracket(field_poly, _poly_bracket(field_poly, h))
        rep.add(f"[N, [N, {h} d]] stays in the span", twice.degree("x") <= 2)
    # control: x d is semisimple, so its adjoint matrix is not nilpotent
    ad_x = sl2_adjoint_matrix(x)
    rep.add("control: ad of x d is not nilpotent", not (ad_x @ ad_x @ ad_x).is_zero())
    return rep
