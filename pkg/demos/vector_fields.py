"""Vector fields f(x) d/dx on the line: brackets, closure, coordinate changes."""

from fractions import Fraction

from flagcurves import QuasiPoly, VectorField1D, bracket, check_closure
from flagcurves.lie1d import DX, CoordChange, flow_identities, listed_algebras, verify_coord_change


def main():
    sin, cos = VectorField1D(QuasiPoly.sin(2)), VectorField1D(QuasiPoly.cos(2))
    print("[sin(2x) d, cos(2x) d] =", bracket(sin, cos))

    for name, basis in listed_algebras(Fraction(1, 2)):
        res = check_closure(basis)
        print(f"{name:<32} closed={res.closed} dim={res.dimension}")

    res = check_closure([DX, VectorField1D(QuasiPoly.monomial(2))])
    j, i, br = res.counterexample
    print("span{d, x^2 d} is not closed:", br)

    # y = tan(x/2) turns d/dx into (1/2)(1 + y^2) d/dy.  tan is not a
    # quasi-polynomial, so the check compares Taylor coefficients exactly.
    print()
    print(verify_coord_change(CoordChange("tan", 1, 16)).render())

    print()
    print(flow_identities().render())


if __name__ == "__main__":
    main()
