from fractions import Fraction as F

import pytest

from qaskey.families import P2, P2_PAIR, P2_TRIPLE, eval_family, make_params
from qaskey.limits import (DEFAULT_LAMBDAS, QBESSEL_PARAMS, TRANSITIONS, check_limit, check_lqj_routes,
                           check_printed_Ztilde, check_qbessel_limit, decay_verdict, default_case, deviations,
                           lqj_prefactor, run_all)

TWO_SIDED = ("nonsymAW-nonsymCDqH", "vecAW-vecBqJ")


def _ns(tid):
    return range(-4, 5) if tid in TWO_SIDED else range(5)


@pytest.mark.parametrize("tid", TRANSITIONS)
def test_transition_decays_at_declared_order(tid):
    p, point = default_case(tid)
    for n in _ns(tid):
        rep = check_limit(tid, p, n, point)
        assert rep.passed, (n, rep.witness)


@pytest.mark.parametrize("tid", [t for t in TRANSITIONS if not t.startswith("eig:AW-BqJ")])
def test_wrong_order_is_rejected(tid):
    p, point = default_case(tid)
    t = TRANSITIONS[tid]
    wrong = 2 if t.order == 1 else 1
    n = 2
    devs = deviations(tid, p, n, point)
    if all(d == 0 for d in devs):
        pytest.skip("deviation is identically zero here")
    assert not check_limit(tid, p, n, point, order=wrong).passed


def test_n_zero_has_no_deviation():
    for tid in ("AW-CDqH", "CDqH-ASC", "BqJ-LqJ-c0", "AW-BqJ"):
        p, point = default_case(tid)
        assert all(d == 0 for d in deviations(tid, p, 0, point))


def test_aw_bqj_eigenvalue_is_exact():
    p, point = default_case("eig:AW-BqJ")
    assert all(d == 0 for d in deviations("eig:AW-BqJ", p, 3, point))


def test_first_order_ratio_is_a_tenth():
    p, point = default_case("AW-CDqH")
    devs = deviations("AW-CDqH", p, 3, point)
    for r in (devs[1] / devs[0], devs[2] / devs[1]):
        assert F(1, 20) <= r <= F(1, 5)


def test_decay_verdict():
    lams = DEFAULT_LAMBDAS
    assert decay_verdict([F(1), F(1, 10), F(1, 100)], lams, 1)[0]
    assert not decay_verdict([F(1), F(1, 10), F(1, 100)], lams, 2)[0]
    assert not decay_verdict([F(1), F(1), F(1)], lams, 1)[0]
    assert decay_verdict([F(0)] * 3, lams, 1)[0]
    assert not decay_verdict([F(0), F(1), F(1, 10)], lams, 1)[0]


def test_lambdas_must_decrease():
    p, point = default_case("AW-CDqH")
    with pytest.raises(ValueError):
        check_limit("AW-CDqH", p, 1, point, lambdas=(F(1, 100), F(1, 10)))


def test_d_to_zero_directly():
    # exact evaluation at the limit point agrees with the target family
    cd = make_params("CDqH", P2.q, P2.a, P2.b, P2.c)
    at0 = make_params("AW", P2.q, P2.a, P2.b, P2.c, F(0), validate=False)
    for n in range(5):
        assert eval_family(at0, n, F(2)) == eval_family(cd, n, F(2))


@pytest.mark.parametrize("n", range(-2, 5))
def test_qbessel_limit(n):
    rep = check_qbessel_limit(QBESSEL_PARAMS, n, F(3, 2), F(1, 20))
    assert rep.passed, rep.witness
    assert float(rep.witness["deviations"][-1]) <= 1e-10


def test_qbessel_rate_at_half_misses_tolerance():
    # the error decays like q^N, so at q = 1/2 it is still above 1e-10 at N = 25
    p = make_params("ASC", F(1, 2), F(1, 3), F(1, 5))
    rep = check_qbessel_limit(p, 1, F(3, 2), F(1, 20))
    assert not rep.passed
    d = [float(x) for x in rep.witness["deviations"]]
    assert d[0] > d[1] > d[2] > 1e-10


def test_lqj_routes():
    assert check_lqj_routes(P2_PAIR).passed
    assert lqj_prefactor(0, F(1, 3), F(1, 5), F(1, 2)) == 1


def test_rescaled_Z_entries_are_exact():
    assert check_printed_Ztilde(P2_TRIPLE.as_family("BqJ")).passed


def test_run_all():
    rep = run_all()
    assert rep.passed, [f.relation for f in rep.failures()]
