from fractions import Fraction as F

import oracles
import pytest
from hypothesis import given
from strategies import laurent, points

from qaskey.core import (DenominatorVanishes, Laurent, Mat2, NotPolynomial, RationalFunction, Seq, Vec2,
                         laurent_eval, op_equal_on_basis)
from qaskey.families import (P1, P2, P2_PAIR, P2_TRIPLE, E_laurent, dual_paramset, eigenvalue, make_params,
                             vecE_laurent, z_grid)
from qaskey.limitops import bqj_matrix
from qaskey.operators import (GridCollision, catalog, conjugated, matrix_Z, op_daha, op_daha_degenerate, op_dual_side,
                              op_L, op_Lambda, op_M, op_matrix, op_N, op_S, op_S_inv, vec2_decompose,
                              vec2_recompose)

FAMILIES = {
    "AW": P2,
    "CDqH": make_params("CDqH", P2.q, P2.a, P2.b, P2.c),
    "ASC": make_params("ASC", P2.q, P2.a, P2.b),
    "BqJ": make_params("BqJ", P2_TRIPLE.q, P2_TRIPLE.a, P2_TRIPLE.b, P2_TRIPLE.c),
    "LqJ": make_params("LqJ", P2_PAIR.q, P2_PAIR.a, P2_PAIR.b),
}
z = Laurent.gen("z")
zi = Laurent({-1: 1})


@pytest.mark.parametrize("fam", FAMILIES)
def test_L_on_constants(fam):
    p = FAMILIES[fam]
    one = Laurent({0: 1}, "x" if fam in ("BqJ", "LqJ") else "z")
    assert op_L(p)(one) == one * eigenvalue(p, 0)


def test_aw_L_matches_pointwise_oracle():
    f = z + zi
    out = op_L(P2)(f)
    assert out.is_symmetric() and out.degree() == 1
    for pt in (F(2), F(3), F(-5, 2), F(2, 7), F(7, 3)):
        want = oracles.L_aw_at(lambda w: w + 1 / w, pt, P2.q, P2.a, P2.b, P2.c, P2.d)
        assert laurent_eval(out, pt) == want


def test_L_rejects_non_symmetric_input():
    with pytest.raises(NotPolynomial):
        op_L(P2)(z)


@pytest.mark.parametrize("fam", FAMILIES)
def test_M_row_sum(fam):
    p = FAMILIES[fam]
    Mg = op_M(p)(Seq(lambda n: F(1)))
    expected = p.a + 1 / p.a if fam in ("AW", "CDqH", "ASC") else F(1)
    assert all(Mg(n) == expected for n in range(6))


def test_M_never_reads_below_zero():
    def g(n):
        if n < 0:
            raise AssertionError("read g(-1)")
        return F(n + 1)
    op_M(P2)(Seq(g))(0)


def test_Lambda_values():
    one = Seq(lambda n: F(1))
    assert op_Lambda(P2)(one)(0) == 1 + P2.abcd / P2.q
    assert op_Lambda(FAMILIES["CDqH"])(one)(3) == 8
    assert op_N(P1)(one)(-2) == 16


def test_T1_hecke_relation():
    T1 = op_daha("T1", P2)
    assert op_equal_on_basis((T1 + P2.a * P2.b) @ (T1 + 1), None, 8, "laurent")


@pytest.mark.parametrize("a,b", [("T1", "T1inv"), ("T0", "T0inv"), ("Y", "Yinv"), ("Z", "Zinv")])
def test_inverse_pairs(a, b):
    A, B = op_daha(a, P2), op_daha(b, P2)
    for k in range(-8, 9):
        e = Laurent({k: 1})
        assert A(B(e)) == e == B(A(e))


def test_Y_is_T1_T0_and_Y_inverse_identity():
    T1, T0, Y = op_daha("T1", P2), op_daha("T0", P2), op_daha("Y", P2)
    T1i, T0i, Yi = op_daha("T1inv", P2), op_daha("T0inv", P2), op_daha("Yinv", P2)
    assert op_equal_on_basis(Y, T1 @ T0, 8, "laurent")
    assert op_equal_on_basis(Yi, T0i @ T1i, 8, "laurent")
    k = P2.q / (P2.c * P2.d)
    assert op_equal_on_basis(Yi, T1i @ Y @ T1i * (-k) + T1i * (-(1 + k)), 8, "laurent")


def test_D_equals_L_on_symmetric():
    D = op_daha("D", P2)
    assert D(z + zi) == op_L(P2)(z + zi)
    assert op_equal_on_basis(D, op_L(P2), 8, "symmetric")


def test_cdqh_degenerate_eigen():
    p = FAMILIES["CDqH"]
    Y, Yp = op_daha_degenerate("CDqH", "Y", p), op_daha_degenerate("CDqH", "Yp", p)
    pd = p.with_(d=F(0))
    for n in range(0, 6):
        E = E_laurent(pd, n)
        assert Y(E) == 0
        assert Yp(E) == E * (p.q ** (-n) / (p.a * p.b))
        Em = E_laurent(pd, -n - 1)
        assert Y(Em) == Em * p.q ** (-n - 1)
        assert Yp(Em) == 0


def test_bqj_X_Xp_annihilate():
    p = FAMILIES["BqJ"]
    X, Xp = Mat2(*bqj_matrix("X", p)), Mat2(*bqj_matrix("Xp", p))
    zero = Mat2(0, 0, 0, 0)
    assert X @ Xp == zero and Xp @ X == zero


def test_decompose_constant_and_round_trip():
    v = vec2_decompose(Laurent({0: 1}), P2)
    assert v == Vec2(Laurent({0: 1}), Laurent({}))
    f = Laurent({3: 1})
    assert vec2_recompose(vec2_decompose(f, P2), P2) == f


@given(laurent())
def test_round_trip_property(f):
    assert vec2_recompose(vec2_decompose(f, P2), P2) == f


@pytest.mark.parametrize("n", range(-4, 5))
def test_decompose_E_matches_vector_family(n):
    assert vec2_decompose(E_laurent(P2, n), P2) == vecE_laurent(P2, n)


def test_decompose_requires_ab_not_one():
    p = make_params("AW", F(1, 2), F(2), F(1, 2), F(1, 3), F(1, 5), validate=False)
    with pytest.raises(DenominatorVanishes):
        vec2_decompose(z, p)


def _as_rf(e):
    return e if isinstance(e, RationalFunction) else RationalFunction(
        e if isinstance(e, Laurent) else Laurent({0: e}), Laurent({0: 1}))


def test_S_acts_as_evaluation_pair():
    f = Laurent({3: 1, -1: 2, 0: 5})
    v = vec2_decompose(f, P2)
    out = op_S(P2) @ v
    assert out.x == f and out.y == f.reflect()


def test_S_inverse_and_conjugated_Z():
    S, Si = op_S(P2).map(_as_rf), op_S_inv(P2)
    one = _as_rf(1)
    assert Si @ S == Mat2(one, _as_rf(0), _as_rf(0), one)
    Zi = matrix_Z(P2, inverse=True).map(_as_rf)
    assert Si @ Mat2(_as_rf(zi), _as_rf(0), _as_rf(0), _as_rf(z)) @ S == Zi


def test_printed_S_inverse_is_not_an_inverse():
    # negative control: first-row entries swapped
    Si = op_S_inv(P2)
    printed = Mat2(Si.b, Si.a, Si.c, Si.d)
    S = op_S(P2).map(_as_rf)
    assert printed @ S != Mat2(_as_rf(1), _as_rf(0), _as_rf(0), _as_rf(1))


def test_det_Z_is_one():
    assert matrix_Z(P2).det() == 1
    assert matrix_Z(P1).det() == 1


@pytest.mark.parametrize("gen", ["T1", "T1inv", "Y", "Yinv", "Z", "Zinv"])
def test_matrix_conjugation_consistency(gen):
    assert op_equal_on_basis(op_matrix(gen, P2), conjugated(op_daha(gen, P2), P2), 6, "vec2-sym")


@given(points())
def test_matrix_Z_inverse_pointwise(pt):
    Z, Zi = matrix_Z(P2), matrix_Z(P2, inverse=True)
    m = (Z @ Zi).map(lambda e: laurent_eval(e, pt) if isinstance(e, Laurent) else e)
    assert m == Mat2(1, 0, 0, 1)


def test_T_script_restricts_T1():
    dp = dual_paramset(P1)
    f = Laurent({2: 1})
    g = Seq(lambda m: laurent_eval(f, 1 / z_grid(P1.a, P1.q, m)))
    Tg = op_dual_side("T_script", dp)(g)
    Tf = op_daha("T1", P1)(f)
    for m in range(-4, 5):
        assert Tg(m) == laurent_eval(Tf, 1 / z_grid(P1.a, P1.q, m))


def test_T_script_grid_collision():
    # the dual parameters restrict T1 for P1', whose a = 1 puts z(0) on the
    # fixed point of z -> 1/z
    dp = dual_paramset(make_params("AW", F(1, 4), F(1), F(1, 4), F(1, 3), F(3), validate=False))
    with pytest.raises(GridCollision):
        op_dual_side("T_script", dp)(Seq(lambda m: F(1)))(0)


def test_catalog_domains():
    cat = catalog()
    allowed = {"symmetric-Laurent", "Laurent", "sequence", "vec2", "x-polynomial"}
    assert all(e["domain"] in allowed for e in cat)
    names = {(e["name"], e["family"]) for e in cat}
    for fam in FAMILIES:
        assert ("L", fam) in names and ("M", fam) in names
    assert ("Y", "AW") in names and ("S", "AW") in names
    cat[0]["name"] = "changed"
    assert catalog()[0]["name"] == "L"
