"""Walk through the SL(3) Borel case: exponentials, the criterion, the table."""

from flagcurves import LieElement, build_criterion_system, classify_curve, exp_nilpotent
from flagcurves.classify import SL3, render_table, reproduce_table, sl3_matrix, sl3_normal_form


def main():
    # A curve t -> exp(tX) o through the origin.  X lives in the strictly
    # lower triangular matrices, so exp(tX) is a polynomial in t.
    x = sl3_matrix(1, 1, 1)
    print("X =")
    print(x)
    print("exp(tX) =")
    print(exp_nilpotent(x))

    # The criterion: find Y (lower) and r (upper unipotent) so that
    # exp(-(t/(t+1))Y) r exp(tX) stays upper triangular for all t.
    e21 = LieElement.unit(SL3, 2, 1)
    system = build_criterion_system(SL3, e21)
    print("\nequations for X = E21:")
    for eq in system.equations:
        print("   ", eq, "= 0")

    res = classify_curve(SL3, e21)
    print("\nE21 ->", res.variant)
    print("Y =")
    print(res.y)
    print("r =")
    print(res.r)

    # Adding E31 + E32 kills every solution.  The reduced Groebner basis is {1}.
    res = classify_curve(SL3, x)
    print("\nE21 + E31 + E32 ->", res.variant, "certificate", res.certificate.to_strings())

    # Any lower triangular X reduces to one of seven normal forms under the
    # diagonal matrices.  x = b/(ac) survives as an invariant.
    y = sl3_matrix(2, 3, 5)
    nf = sl3_normal_form(y)
    print(f"\n(2, 3, 5) is row {nf.row_id} with x = {nf.parameter}")

    print()
    print(render_table(reproduce_table()))


if __name__ == "__main__":
    main()
