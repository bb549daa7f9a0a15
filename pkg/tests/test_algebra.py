from dataclasses import replace
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qaskey.algebra import (NC, PRESENTATIONS, TERWILLIGER_PARAMS, basic_pair, casimir, casimir_from_omega,
                            check_algebra_duality, check_daha, check_daha_identities, check_family_zhedanov,
                            check_relation, check_relations, check_terwilliger, check_zhedanov,
                            default_bindings, gens, presentation_relations, structure_constants,
                            terwilliger_back, terwilliger_form, terwilliger_relations, tilde_bindings)
from qaskey.core import NotRationalSquare
from qaskey.families import P1, P2, P2_PAIR, P2_TRIPLE, InvalidParams, make_params

FAMILY_PARAMS = {
    "AW": P2,
    "CDqH": P2_TRIPLE.as_family("CDqH"),
    "ASC": P2_PAIR.as_family("ASC"),
    "BqJ": P2_TRIPLE.as_family("BqJ"),
    "LqJ": P2_PAIR.as_family("LqJ"),
}
PRESENTATION_FAMILY = {"AW": "AW", "CDqH": "CDqH", "AWqB": "CDqH", "BqJ": "BqJ", "ASC": "ASC", "LqJ": "LqJ"}


# noncommutative polynomials

nc_scalars = st.fractions(min_value=-3, max_value=3, max_denominator=5)


@st.composite
def nc(draw):
    g = gens("A", "B")
    out = NC.scalar(draw(nc_scalars))
    for _ in range(draw(st.integers(0, 3))):
        w = NC.scalar(draw(nc_scalars))
        for i in draw(st.lists(st.integers(0, 1), max_size=3)):
            w = w * g[i]
        out = out + w
    return out


@given(nc(), nc(), nc())
def test_nc_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert (x + y) * z == x * z + y * z
    assert (x * y).reverse() == y.reverse() * x.reverse()


def test_nc_is_noncommutative():
    A, B = gens("A", "B")
    assert A * B != B * A
    assert (A + B) ** 2 == A * A + A * B + B * A + B * B


def test_nc_substitute():
    A, B = gens("A", "B")
    assert (A * B).substitute({"A": B + 1}) == B * B + B


# Zhedanov algebras


@pytest.mark.parametrize("dual", [False, True], ids=["basic", "dual"])
@pytest.mark.parametrize("fam", FAMILY_PARAMS)
def test_zhedanov_relations_and_casimir(fam, dual):
    rep = check_family_zhedanov(fam, FAMILY_PARAMS[fam], 8, dual=dual)
    assert rep.passed, rep.failures()[:1]
    assert rep.checked > 0


def test_casimir_acts_as_Q0_on_each_basis_element():
    sc = structure_constants("AW", P2)
    k0, k1, dom, var = basic_pair("AW", P2)
    rep = check_relation("t", "Q = Q0", casimir(sc), sc.Q0, {"K0": k0, "K1": k1}, dom, 8, var)
    assert rep.passed


def test_zhedanov_detects_wrong_constant():
    sc = structure_constants("AW", P2)
    k0, k1, dom, var = basic_pair("AW", P2)
    bad = replace(sc, D0=sc.D0 + F(1, 1000))
    rep = check_zhedanov(k0, k1, bad, 4, dom, var)
    assert not rep.passed
    assert rep.failures()[0].witness is not None


def _printed_cdqh_B(q, a, b, c):
    return (1 - 1 / q) ** 2 * (a * b + a * c + b * c + q * (a + b + c))


def test_printed_cdqh_b_fails():
    # negative controls: the B displayed for CDqH and ASC
    p = FAMILY_PARAMS["CDqH"]
    sc = structure_constants("CDqH", p)
    k0, k1, dom, var = basic_pair("CDqH", p)
    printed = replace(sc, B=_printed_cdqh_B(p.q, p.a, p.b, p.c))
    assert printed.B != sc.B
    assert not check_zhedanov(k0, k1, printed, 4, dom, var).passed
    pa = FAMILY_PARAMS["ASC"]
    sa = structure_constants("ASC", pa)
    k0, k1, dom, var = basic_pair("ASC", pa)
    printed = replace(sa, B=(1 - 1 / pa.q) ** 2 * (pa.a * pa.b + pa.q * (pa.a + pa.b)))
    assert not check_zhedanov(k0, k1, printed, 4, dom, var).passed


def test_cdqh_B_is_d_to_zero_limit_of_aw():
    p = FAMILY_PARAMS["CDqH"]
    aw = structure_constants("AW", make_params("AW", p.q, p.a, p.b, p.c, F(0), validate=False))
    assert structure_constants("CDqH", p).B == aw.B


@settings(max_examples=10, deadline=None)
@given(st.sampled_from([F(1, 2), F(1, 3), F(2, 5)]),
       st.lists(st.fractions(min_value=F(-3, 2), max_value=F(3, 2), max_denominator=5)
                .filter(lambda x: x not in (0, 1, -1)), min_size=4, max_size=4))
def test_aw_zhedanov_property(q, abcd):
    a, b, c, d = abcd
    try:
        p = make_params("AW", q, a, b, c, d)
    except InvalidParams:
        return
    assert check_family_zhedanov("AW", p, 3).passed


# Terwilliger form

def test_terwilliger_identities():
    rep = check_terwilliger(TERWILLIGER_PARAMS, 8)
    assert rep.passed, rep.failures()[:1]


def test_terwilliger_params_single_out_alpha2():
    # at P1 alpha0^2 = alpha2^2, so the constant of the omega identity is ambiguous there
    tc = terwilliger_form(structure_constants("AW", TERWILLIGER_PARAMS))
    assert tc.alpha2 ** 2 not in (tc.alpha0 ** 2, tc.alpha1 ** 2)
    t1 = terwilliger_form(structure_constants("AW", P1), sqrt_q=F(1, 2))
    assert t1.alpha0 ** 2 == t1.alpha2 ** 2


def test_terwilliger_needs_squares():
    with pytest.raises(NotRationalSquare):
        terwilliger_form(structure_constants("AW", P2))


def test_printed_omega_constant_fails():
    # the omega identity with -alpha2 in place of -alpha2^2
    p = TERWILLIGER_PARAMS
    sc = structure_constants("AW", p)
    tc = terwilliger_form(sc)
    name, omega, rhs = terwilliger_relations(sc, tc)[-1]
    k0, k1, dom, var = basic_pair("AW", p)
    bind = {"K0": k0, "K1": k1}
    assert check_relation("t", name, omega, rhs, bind, dom, 4, var).passed
    printed = rhs + tc.alpha2 ** 2 - tc.alpha2
    assert not check_relation("t", "printed", omega, printed, bind, dom, 4, var).passed


def test_terwilliger_back_map_and_casimir():
    p = TERWILLIGER_PARAMS
    sc = structure_constants("AW", p)
    tc = terwilliger_form(sc)
    back = terwilliger_back(tc, p.q)
    assert (back.B, back.C0, back.C1, back.D0, back.D1) == (sc.B, sc.C0, sc.C1, sc.D0, sc.D1)
    # printed back-map: C1 = (q - 1/q)^2 / c0
    assert (p.q - 1 / p.q) ** 2 / tc.c0 != sc.C1
    omega_value = (p.q - 1 / p.q) ** 2 / (sc.C0 * sc.C1) * sc.Q0 - tc.alpha2 ** 2
    assert casimir_from_omega(omega_value, tc, p.q) == sc.Q0


# DAHA presentations

@pytest.mark.parametrize("pr", PRESENTATIONS)
def test_daha_presentation(pr):
    p = FAMILY_PARAMS[PRESENTATION_FAMILY[pr.split("-")[0]]]
    rep = check_daha(pr, p, max_deg=8)
    assert rep.passed, rep.failures()[:1]


@pytest.mark.parametrize("p", [P1, P2], ids=["P1", "P2"])
def test_daha_identities(p):
    rep = check_daha_identities(p, 8)
    assert rep.passed, rep.failures()[:1]


def _swap_relation(pr, p, label, lhs, rhs=0):
    rels = [(n, lhs if n == label else l, rhs if n == label else r)
            for n, l, r in presentation_relations(pr, p)]
    assert any(n == label for n, _, _ in rels)
    return rels


def test_printed_cdqh_fifth_relation_fails():
    p = FAMILY_PARAMS["CDqH"]
    b, dom, var, _ = default_bindings("CDqH-151", p)
    T1i, Y = gens("T1inv", "Y")
    rels = _swap_relation("CDqH-151", p, "Y T1inv Y + Y = 0", Y * T1i * Y + p.c)
    rep = check_relations("t", rels, b, dom, 4, var)
    assert [f.relation for f in rep.failures()] == ["Y T1inv Y + Y = 0"]


def test_printed_lqj_tilde_constants_fail():
    p = FAMILY_PARAMS["LqJ"]
    b, dom, var, _ = tilde_bindings(p)
    a, bb, q = p.a, p.b, p.q
    T1, T0, T0i, Xt, Xtp = gens("T1", "T0", "T0inv", "Xt", "Xtp")
    label = "(a/b) T0inv Xt + q Xtp T0 + q = 0"
    rels = _swap_relation("LqJ-tilde-146", p, label, (a / bb) * T0i * Xt + q * Xtp * T0 + a)
    assert not check_relations("t", rels, b, dom, 4, var).passed
    rels = _swap_relation("LqJ-tilde-147", p, "(T1+ab)(T1+1) = 0", (T1 + q * a) * (T1 + 1))
    assert not check_relations("t", rels, b, dom, 4, var).passed


def test_presentation_catches_broken_binding():
    p = P2
    b, dom, var, _ = default_bindings("AW-71", p)
    b = dict(b, T0=b["T1"])
    assert not check_daha("AW-71", p, bindings=b, max_deg=3).passed


# algebra duality

@pytest.mark.parametrize("pair,p", [("AW", P1), ("AW", TERWILLIGER_PARAMS), ("CDqH-BqJ", P2_TRIPLE),
                                    ("ASC-LqJ", P2_PAIR), ("q-inverse", P2)])
def test_algebra_duality(pair, p):
    rep = check_algebra_duality(pair, p)
    assert rep.passed, rep.failures()[:1]


def test_printed_dual_B_fails_off_P1():
    from qaskey.families import dual_paramset
    for p, distinguishable in ((P1, False), (TERWILLIGER_PARAMS, True)):
        dp = dual_paramset(p)
        sc, sd = structure_constants("AW", p), structure_constants("AW", dp)
        assert sd.B == p.a / dp.a * sc.B
        assert (sd.B != p.a / dp.a ** 2 * sc.B) == distinguishable
