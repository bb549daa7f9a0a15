from fractions import Fraction as F

import oracles
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qaskey.algebra import TERWILLIGER_PARAMS
from qaskey.core import Laurent
from qaskey.duality import (OPERATOR_CASES, POLY_CASES, check_c0_consistency, check_hat_functoriality,
                            check_operator_duality, check_poly_duality, dual_for, eigen_example_18)
from qaskey.families import (P1, P2_PAIR, P2_TRIPLE, asc_to_lqj, cdqh_to_bqj, dual_paramset, eval_nonsym_E,
                             make_params, z_grid)
from qaskey.operators import GridCollision

POLY_PARAMS = {"AW": P1, "CDqH-BqJ": P2_TRIPLE, "ASC-LqJ": P2_PAIR, "nonsym-AW": P1, "mixed-2D": P1,
               "degenerate-nonsym": P2_TRIPLE, "AWqB-LqJ": P2_PAIR}


@pytest.mark.parametrize("case", POLY_CASES)
def test_poly_duality(case):
    grid = 6 if case in ("AW", "CDqH-BqJ", "ASC-LqJ") else 5
    rep = check_poly_duality(case, POLY_PARAMS[case], grid)
    assert rep.passed, rep.failures()[:1]
    two_sided = case in ("nonsym-AW", "mixed-2D", "degenerate-nonsym")
    assert rep.checked == ((2 * grid + 1) ** 2 if two_sided else (grid + 1) ** 2)


def test_aw_duality_from_oracles():
    # both sides from the independent series, at P1
    q, a, b, c, d = P1.q, P1.a, P1.b, P1.c, P1.d
    at, bt, ct, dt = oracles.dual_aw(q, a, b, c, d)
    assert at == 1
    for m in range(5):
        for n in range(5):
            lhs = oracles.aw(n, 1 / (a * q ** m), q, a, b, c, d)
            rhs = oracles.aw(m, 1 / (at * q ** n), q, at, bt, ct, dt)
            assert lhs == rhs


def test_cdqh_bqj_duality_from_oracles():
    q, a, b, c = P2_TRIPLE.q, P2_TRIPLE.a, P2_TRIPLE.b, P2_TRIPLE.c
    for m in range(5):
        for n in range(5):
            assert (oracles.cdqh(n, 1 / (a * q ** m), q, a, b, c)
                    == oracles.bqj(m, q ** -n, q, a * b / q, a / b, a * c / q))


def test_rational_maps():
    assert cdqh_to_bqj(P2_TRIPLE.as_family("CDqH")) == make_params(
        "BqJ", P2_TRIPLE.q, P2_TRIPLE.a * P2_TRIPLE.b / P2_TRIPLE.q, P2_TRIPLE.a / P2_TRIPLE.b,
        P2_TRIPLE.a * P2_TRIPLE.c / P2_TRIPLE.q)
    assert asc_to_lqj(P2_PAIR.as_family("ASC")).c == 0
    assert dual_paramset(dual_paramset(P1)) == P1


def test_trivial_corner():
    for case in ("AW", "CDqH-BqJ", "ASC-LqJ"):
        assert check_poly_duality(case, POLY_PARAMS[case], 0).passed


@given(st.integers(-5, 5), st.integers(-5, 5))
def test_nonsym_duality_is_symmetric(m, n):
    # swapping (m, n) and the roles of P1 and its dual gives the same identity
    dp = dual_paramset(P1)
    lhs = eval_nonsym_E(P1, n, 1 / z_grid(P1.a, P1.q, m))
    rhs = eval_nonsym_E(dp, m, 1 / z_grid(dp.a, P1.q, n))
    assert lhs == rhs


def test_printed_degenerate_grid_fails_for_negative_n():
    rep = check_poly_duality("degenerate-nonsym", P2_TRIPLE, 3, form="printed")
    assert not rep.passed
    assert all(int(f.witness["n"]) < 0 for f in rep.failures())


def test_c0_consistency():
    assert check_c0_consistency(P2_PAIR).passed


def test_dual_for_rejects_unknown():
    with pytest.raises(ValueError):
        dual_for("nope", P1)


def _operator_params(case):
    if case in ("CDqH-L", "BqJ-L"):
        return P2_TRIPLE
    if case in ("ASC-L", "LqJ-L"):
        return P2_PAIR
    # the dual recurrence in DAHA-Y is 0/0 at n = 0 when abcd = q, as for P1
    return TERWILLIGER_PARAMS if case == "DAHA-Y" else P1


@pytest.mark.parametrize("case", OPERATOR_CASES)
def test_operator_duality(case):
    rep = check_operator_duality(case, _operator_params(case), 6, 5 if case.startswith("DAHA") else 6)
    assert rep.passed, rep.failures()[:1]


@pytest.mark.parametrize("case", ["DAHA-Z", "DAHA-T1", "AW-L", "AW-Lambda"])
def test_operator_duality_at_second_square_set(case):
    assert check_operator_duality(case, TERWILLIGER_PARAMS, 6, 4).passed


def test_daha_Y_duality_degenerates_at_P1():
    with pytest.raises(ZeroDivisionError):
        check_operator_duality("DAHA-Y", P1, 2, 2)


def test_daha_Z_on_z_cubed():
    rep = check_operator_duality("DAHA-Z", P1, m_max=4, funcs=[("z^3", Laurent({3: 1}))])
    assert rep.passed and rep.checked == 9


@pytest.mark.parametrize("case", ["CDqH-L", "ASC-L"])
def test_printed_restriction_parameter_map_fails(case):
    src = P2_TRIPLE if case == "CDqH-L" else P2_PAIR
    assert check_operator_duality(case, src, 4, 4).passed
    assert not check_operator_duality(case, src, 4, 4, form="printed").passed


@pytest.mark.parametrize("n", range(4))
def test_operator_duality_on_eigenfunctions(n):
    assert eigen_example_18(P1, n).passed


def test_hat_functoriality():
    assert check_hat_functoriality(P1).passed


def test_grid_collision():
    # a^2 = 1/q puts z(0) = a on z(-1) = 1/(qa)
    p = make_params("AW", F(1, 4), F(2), F(1, 2), F(1, 3), F(3, 4), validate=False)
    with pytest.raises(GridCollision):
        check_operator_duality("DAHA-Z", p, 2, 2)
