"""Beyond the Borel case: curves in SL(4)/P for a few block shapes."""

from flagcurves import FlagContext, LieElement, classify_curve


def main():
    cases = [
        ((2, 2), {(2, 0): 1}),
        ((2, 2), {(2, 0): 1, (3, 1): 1}),
        ((1, 3), {(1, 0): 1, (3, 0): 2}),
        ((1, 1, 1, 1), {(1, 0): 1, (2, 1): 1, (3, 2): 1}),
        ((1, 1, 1, 1), {(1, 0): 1, (2, 0): 1, (2, 1): 1}),
    ]
    for blocks, entries in cases:
        ctx = FlagContext(4, blocks)
        x = LieElement.from_entries(ctx, entries)
        res = classify_curve(ctx, x)
        print(f"blocks {blocks}, nonzero entries {entries}: {res.variant}")
        if res.certificate is not None:
            print("    certificate", res.certificate.to_strings())
        elif res.y is not None:
            print("    Y =", [[str(v) for v in row] for row in res.y.entries])


if __name__ == "__main__":
    main()
