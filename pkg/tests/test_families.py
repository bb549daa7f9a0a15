from fractions import Fraction as F

import oracles
import pytest
from hypothesis import given
from hypothesis import strategies as st
from strategies import points

from qaskey.core import NotRationalSquare, Vec2, laurent_eval
from qaskey.families import (P1, P2, P2_PAIR, P2_TRIPLE, E_laurent, InvalidParams, R_laurent, dual_params,
                             eigenvalue, eval_family, eval_nonsym_E, eval_qbessel, eval_vector_E, little_q_jacobi,
                             make_params, recompose_factor, sigma, spectral, vecE_laurent, z_grid)
from qaskey.limits import lqj_prefactor

TRIPLE_BQJ = make_params("BqJ", *[P2_TRIPLE.q, P2_TRIPLE.a, P2_TRIPLE.b, P2_TRIPLE.c])
PAIR_LQJ = make_params("LqJ", P2_PAIR.q, P2_PAIR.a, P2_PAIR.b)
ALL = [P2, make_params("CDqH", P2.q, P2.a, P2.b, P2.c), make_params("ASC", P2.q, P2.a, P2.b), TRIPLE_BQJ, PAIR_LQJ]


def _oracle(p, n, pt):
    q, a, b, c, d = p.q, p.a, p.b, p.c, p.d
    return {"AW": lambda: oracles.aw(n, pt, q, a, b, c, d), "CDqH": lambda: oracles.cdqh(n, pt, q, a, b, c),
            "ASC": lambda: oracles.asc(n, pt, q, a, b), "BqJ": lambda: oracles.bqj(n, pt, q, a, b, c),
            "LqJ": lambda: oracles.lqj(n, pt, q, a, b)}[p.family]()


# frozen values from the independent oracle
FROZEN = {
    ("AW", 2, F(2)): F(56507, 134995),
    ("BqJ", 2, F(2, 7)): F(397, 28600),
}


@pytest.mark.parametrize("p", ALL, ids=lambda p: p.family)
@pytest.mark.parametrize("n", range(0, 7))
def test_eval_family_matches_oracle(p, n):
    for pt in (F(2), F(3), F(2, 7)):
        assert eval_family(p, n, pt) == _oracle(p, n, pt)


def test_frozen_values():
    for (fam, n, pt), val in FROZEN.items():
        p = P2 if fam == "AW" else TRIPLE_BQJ
        assert eval_family(p, n, pt) == val
        assert _oracle(p, n, pt) == val


def test_degree_zero_is_one():
    assert all(eval_family(p, 0, F(5, 3)) == 1 for p in ALL)


def test_aw_at_inverse_a_is_one():
    assert all(eval_family(P1, n, 1 / P1.a) == 1 for n in range(7))
    assert all(eval_nonsym_E(P1, n, 1 / P1.a) == 1 for n in range(-5, 6))


def test_lqj_two_forms_agree():
    q, a, b, x = F(1, 2), F(1, 3), F(1, 5), F(2, 7)
    pb = make_params("LqJ", q, b, a, validate=False)
    for n in range(7):
        assert little_q_jacobi(n, x, a, b, q) == lqj_prefactor(n, a, b, q) * eval_family(pb, n, q * b * x, form="P")


def test_laurent_forms_agree_with_pointwise():
    for p in ALL:
        for n in range(5):
            R = R_laurent(p, n) if p.family in ("AW", "CDqH", "ASC") else None
            if R is not None:
                assert laurent_eval(R, F(7, 3)) == eval_family(p, n, F(7, 3))


def test_dual_params_p1():
    d = dual_params(P1)
    assert (d.a, d.b, d.c, d.d) == (1, F(1, 4), F(1, 6), F(3, 2))
    assert d.a * d.b == P1.a * P1.b and d.a * d.c == P1.a * P1.c and d.a * d.d == P1.a * P1.d
    assert (d.a, d.b, d.c, d.d) == oracles.dual_aw(P1.q, P1.a, P1.b, P1.c, P1.d)
    dd = dual_params(d.as_params(P1.q))
    assert {(dd.a, dd.b, dd.c, dd.d), (-dd.a, -dd.b, -dd.c, -dd.d)} >= {(P1.a, P1.b, P1.c, P1.d)} or \
        (-dd.a, -dd.b, -dd.c, -dd.d) == (P1.a, P1.b, P1.c, P1.d)


def test_dual_params_needs_square():
    p = make_params("AW", F(1, 2), 1, 1, 1, 1, validate=False)  # abcd / q = 2
    with pytest.raises(NotRationalSquare):
        dual_params(p)


def test_eigenvalues():
    assert eigenvalue(P2, 0) == 1 + P2.abcd / P2.q
    cd = make_params("CDqH", P2.q, P2.a, P2.b, P2.c)
    assert all(eigenvalue(cd, n) == P2.q ** -n for n in range(6))
    ev = [eigenvalue(P2, n) for n in range(11)]
    assert len(set(ev)) == 11
    assert all(eigenvalue(TRIPLE_BQJ, n) == P2.q ** -n + P2.q ** (n + 1) * P2.a * P2.b for n in range(6))


def test_param_validation():
    with pytest.raises(InvalidParams):
        make_params("AW", 1, F(1, 2), F(1, 3), F(1, 5), F(1, 7))
    with pytest.raises(InvalidParams):
        make_params("AW", F(1, 2), 0, F(1, 3), F(1, 5), F(1, 7))
    with pytest.raises(InvalidParams):
        make_params("AW", F(1, 2), 2, 2, 2, F(1, 2))  # abcd = 4 = q^-2


def test_nonsym_e1_from_oracles():
    q, a, b, c, d = P2.q, P2.a, P2.b, P2.c, P2.d
    zz = F(3)
    den = (1 - q * a * b) * (1 - a * b) * (1 - a * c) * (1 - a * d)
    R1 = oracles.aw(1, zz, q, a, b, c, d)
    R0s = oracles.aw(0, zz, q, q * a, q * b, c, d)
    shift = a / zz * (1 - a * zz) * (1 - b * zz) * R0s
    E1 = R1 - (1 - q) * (1 - c * d) / den * shift
    Em1 = R1 - (1 - q * a * b) * (1 - a * b * c * d) / (den * a * b) * shift
    assert eval_nonsym_E(P2, 1, zz) == E1
    assert eval_nonsym_E(P2, -1, zz) == Em1
    assert eval_nonsym_E(P2, 0, zz) == 1


def test_vector_form_recomposes():
    fac = recompose_factor(P2)
    for n in range(-4, 5):
        v = vecE_laurent(P2, n)
        assert v.x + fac * v.y == E_laurent(P2, n)
        assert eval_vector_E(P2, n, F(3)) == Vec2(laurent_eval(v.x, 3), laurent_eval(v.y, 3))
    assert eval_vector_E(P2, 0, F(3)) == Vec2(F(1), F(0))


def test_bqj_vector_minus_one():
    q, a, b, c = TRIPLE_BQJ.q, TRIPLE_BQJ.a, TRIPLE_BQJ.b, TRIPLE_BQJ.c
    v = eval_vector_E(TRIPLE_BQJ, -1, F(1))
    coef = -q ** -1 * (1 - q * q * a) * (1 - q * q * a * b) / (a * (1 - q * a) * (1 - q * q * a) * (1 - q * c))
    assert v.y == coef
    assert v.x == oracles.bqj(1, F(1), q, a, b, c)


def test_spectral_values():
    assert z_grid(P1.a, P1.q, 0) == P1.a
    for n in range(-4, 5):
        nu = spectral("nu", P1, n)
        assert nu == (P1.q ** (1 - n) / P1.abcd if n >= 0 else P1.q ** -n)
    assert spectral("mu", P1, -2) == F(1, 16)
    assert sigma(P2, 0) == 0


def test_qbessel():
    assert eval_qbessel(0.0, 1.3, 0.9, -0.7, 0.5) == 1.0
    with pytest.raises(ValueError):
        eval_qbessel(0.1, 1.1, 0.9, -0.7, 1.5)
    with pytest.raises(ValueError):
        eval_qbessel(10.0, 1.1, 0.5, -0.7, 0.5)


def test_qbessel_against_cdqh_limit():
    q, a, b, g, zz = F(1, 2), F(9, 10), F(-7, 10), F(1, 10), F(11, 10)
    target = eval_qbessel(0.1, 1.1, 0.9, -0.7, 0.5)
    devs = []
    for N in (20, 25, 30):
        pc = make_params("CDqH", q, a, b, -q ** -N / g, validate=False)
        devs.append(abs(float(eval_family(pc, N, zz)) - target))
    assert devs[0] > devs[1] > devs[2]
    assert devs[2] < 1e-8


# symmetry properties -------------------------------------------------------------

params_aw = st.tuples(*[st.sampled_from([F(1, 2), F(1, 3), F(2, 7), F(3, 11), F(-1, 5), F(4, 9)])] * 4)


@given(params_aw, st.integers(0, 5), points())
def test_sign_symmetry(abcd, n, zz):
    a, b, c, d = abcd
    q = F(1, 3)
    p = make_params("AW", q, a, b, c, d, validate=False)
    m = make_params("AW", q, -a, -b, -c, -d, validate=False)
    try:
        lhs = eval_family(p, n, zz)
    except Exception:
        return
    assert lhs == eval_family(m, n, -zz)


@given(params_aw, st.integers(0, 5), points())
def test_inversion_symmetry(abcd, n, zz):
    a, b, c, d = abcd
    q = F(1, 3)
    p = make_params("AW", q, a, b, c, d, validate=False)
    i = make_params("AW", 1 / q, 1 / a, 1 / b, 1 / c, 1 / d, validate=False)
    try:
        lhs = eval_family(p, n, zz)
    except Exception:
        return
    assert lhs == eval_family(i, n, zz)


@given(params_aw, st.integers(0, 4), points(), st.permutations([0, 1, 2]))
def test_bcd_permutation_symmetry(abcd, n, zz, perm):
    a, *rest = abcd
    q = F(1, 3)
    p = make_params("AW", q, a, *rest, validate=False)
    r = [rest[i] for i in perm]
    s = make_params("AW", q, a, *r, validate=False)
    try:
        lhs = eval_family(p, n, zz)
    except Exception:
        return
    assert lhs == eval_family(s, n, zz)


def _inverted(p):
    return make_params("AW", 1 / p.q, 1 / p.a, 1 / p.b, 1 / p.c, 1 / p.d, validate=False)


@given(st.integers(-4, 4), points())
def test_nonsym_inversion_relation(n, zz):
    # inverting all parameters scales the correction term of E_n by ab
    p, ab = P2, P2.a * P2.b
    lhs = eval_nonsym_E(_inverted(p), n, 1 / zz)
    assert lhs == (1 - ab) * eval_family(p, abs(n), zz) + ab * eval_nonsym_E(p, n, zz)


def test_nonsym_plain_inversion_fails_off_the_grid():
    i = _inverted(P2)
    assert eval_nonsym_E(P2, 0, F(2, 7)) == eval_nonsym_E(i, 0, F(7, 2))
    for n in (1, -1, 2, -2):
        assert eval_nonsym_E(P2, n, F(2, 7)) != eval_nonsym_E(i, n, F(7, 2))
