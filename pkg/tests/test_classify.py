from fractions import Fraction

import pytest

from flagcurves import (
    AFFINE_ONLY,
    PROJECTIVE,
    FlagContext,
    LieElement,
    XZero,
    adjoint,
    classify_curve,
    exp_nilpotent,
    p_conjugacy_search,
    reproduce_table,
    sl3_normal_form,
)
from flagcurves.classify import (
    EXPECTED,
    SL3,
    UNDETERMINED,
    normal_form_matrix,
    render_table,
    sl3_matrix,
    witness_annihilates_product,
)

from gen import CASES, context, levi, nonzero_nilradical, nonzero_rational, rational

ROWS = [(r, None) for r in range(1, 7)] + [(7, x) for x in (1, -1, 2, Fraction(1, 2))]


def row_matrix(row, x):
    return normal_form_matrix(row, x) if row == 7 else normal_form_matrix(row)


def variant(x, ctx=SL3):
    return classify_curve(ctx, x).variant


def random_diagonal(rng):
    d1, d2, d3 = (nonzero_rational(rng) for _ in range(3))
    return LieElement(SL3, [[d1, 0, 0], [0, d2, 0], [0, 0, d3]])


@pytest.mark.parametrize("row, x", ROWS)
def test_table_rows(row, x):
    assert variant(row_matrix(row, x)) == EXPECTED[row]


def test_e21_witness():
    res = classify_curve(SL3, LieElement.unit(SL3, 2, 1))
    assert res.variant == PROJECTIVE
    assert res.assignment == dict(u=1, v=0, w=0, a=1, b=0, c=0)
    assert res.y == LieElement.unit(SL3, 2, 1)
    assert res.to_json()["r"] == [["1", "1", "0"], ["0", "1", "0"], ["0", "0", "1"]]


def test_affine_certificate():
    res = classify_curve(SL3, sl3_matrix(1, 1, 1))
    assert res.variant == AFFINE_ONLY
    assert res.certificate.to_strings() == ["1"]
    assert res.to_json() == {"status": "affine-only", "certificate": ["1"]}


def test_levi_invariance(rng):
    for k in range(CASES):
        row, x = ROWS[k % len(ROWS)]
        nf = row_matrix(row, x)
        assert variant(adjoint(random_diagonal(rng), nf)) == EXPECTED[row]


def test_scale_invariance(rng):
    # exp(t cX) is a reparameterisation of exp(tX)
    for k in range(CASES):
        row, x = ROWS[k % len(ROWS)]
        assert variant(row_matrix(row, x) * nonzero_rational(rng)) == EXPECTED[row]


def test_witness_self_verification(rng):
    projective = 0
    for _ in range(CASES):
        ctx = context(rng, 3)
        res = classify_curve(ctx, nonzero_nilradical(rng, ctx))
        assert res.variant != UNDETERMINED
        if res.variant == PROJECTIVE:
            projective += 1
            assert all(r == 0 for r in res.witness_residuals())
            assert witness_annihilates_product(res)
            assert res.y.in_n() and res.r.in_p()
        else:
            assert res.certificate.is_unit()
    assert projective > 0


def test_normal_form_reaches_the_row(rng):
    for _ in range(CASES):
        x = sl3_matrix(*(rational(rng, 3, 2) for _ in range(3)))
        if x.is_zero():
            continue
        row = sl3_normal_form(x)
        assert adjoint(row.transform, x) == row.normal_form
        assert row.transform.in_l()
        assert variant(x) == EXPECTED[row.row_id]


def test_normal_form_is_idempotent():
    for row, x in ROWS:
        nf = row_matrix(row, x)
        out = sl3_normal_form(nf)
        assert out.row_id == row
        assert out.normal_form == nf
        assert out.transform == LieElement(SL3, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])


def test_normal_form_parameter_is_invariant(rng):
    for _ in range(CASES // 4):
        x = Fraction(rng.randint(1, 9), rng.randint(1, 9)) * rng.choice([1, -1])
        moved = adjoint(random_diagonal(rng), normal_form_matrix(7, x))
        assert sl3_normal_form(moved).parameter == x


def test_normal_form_rejects_zero():
    with pytest.raises(XZero):
        sl3_normal_form(sl3_matrix(0, 0, 0))


@pytest.mark.parametrize("src, dst", [(6, 4), (6, 5), (4, 5), (4, 6), (5, 6)])
def test_p_conjugacy_found(src, dst):
    res = p_conjugacy_search(SL3, normal_form_matrix(src), normal_form_matrix(dst))
    assert res.found
    assert res.p.in_p()
    assert res.z.in_u()
    assert adjoint([res.levi, exp_nilpotent(res.z, 1)], normal_form_matrix(src)) == normal_form_matrix(dst)


def test_p_conjugacy_respects_classification():
    res = p_conjugacy_search(SL3, normal_form_matrix(1), normal_form_matrix(7, 1))
    assert not res.found


def test_table_report():
    report = reproduce_table()
    assert report.all_match
    doc = report.to_json()
    assert [r["rowId"] for r in doc["rows"]] == [1, 2, 3, 4, 5, 6, 7, 7, 7, 7]
    assert all(c["status"] == "found" for c in doc["coincidences"])
    assert render_table(doc) == render_table(report)


def test_table_negative_control():
    report = reproduce_table(expected={3: AFFINE_ONLY})
    assert not report.all_match
    assert "MISMATCH" in render_table(report)


def test_larger_flag_context():
    ctx = FlagContext(4, (2, 2))
    x = LieElement.unit(ctx, 3, 1)
    res = classify_curve(ctx, x)
    assert res.variant == PROJECTIVE
    assert witness_annihilates_product(res)
