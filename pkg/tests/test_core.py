from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st
from strategies import laurent, nonzero, points, small

from qaskey.core import (Laurent, LinOp, Mat2, NotPolynomial, OutOfWindow, RationalFunction, Seq, Vec2,
                         VerificationReport, ZeroPoint, check_equal, combine, exact_div, identity,
                         laurent_eval, op_equal_on_basis, rational_function_to_laurent)

z = Laurent.gen()


def test_laurent_eval_examples():
    assert laurent_eval(z + 1 / z, 3) == Fraction(10, 3)
    assert laurent_eval(Laurent.const(7), Fraction(2, 5)) == 7
    with pytest.raises(ZeroPoint):
        laurent_eval(z + 1 / z, 0)


def test_exact_division_and_remainder():
    f = (1 - 2 * z) * (z - Fraction(1, 3)) * Laurent.mono(-2)
    assert exact_div(f, 1 - 2 * z) == (z - Fraction(1, 3)) * Laurent.mono(-2)
    with pytest.raises(NotPolynomial) as exc:
        exact_div(z * z + 1, z - 1)
    assert exc.value.remainder == Laurent.const(2)


def test_rational_function_reduces_to_laurent():
    r = RationalFunction((z * z - 1) * (z + 3), z + 1)
    assert rational_function_to_laurent(r) == (z - 1) * (z + 3)
    assert not RationalFunction(z, z - 2).is_polynomial()


def test_mixing_variables_is_an_error():
    with pytest.raises(TypeError):
        Laurent.gen("z") + Laurent.gen("x")


def test_seq_window_is_explicit():
    s = Seq(lambda n: Fraction(n), (-2, 2))
    assert s(2) == 2
    with pytest.raises(OutOfWindow):
        s(3)


def test_mat2_inverse_and_det():
    m = Mat2(Fraction(2), Fraction(1), Fraction(5), Fraction(3))
    assert m.det() == 1
    assert m @ m.inverse() == Mat2.identity()
    assert m @ Vec2(Fraction(1), Fraction(0)) == Vec2(Fraction(2), Fraction(5))


def test_op_equal_on_basis_reports_witness():
    A = LinOp(lambda f: f * z, "Z")
    B = LinOp(lambda f: f * z if f.degree() < 3 else f, "Z'")
    rep = op_equal_on_basis(A, B, 4, "laurent")
    assert not rep.passed
    assert rep.witness["basis"] == "z^3"
    assert op_equal_on_basis(A, A, 4, "laurent").passed
    assert op_equal_on_basis(identity() - identity(), None, 3, "laurent").passed


def test_report_tree():
    ok = check_equal("s", "one", Fraction(1), Fraction(1))
    bad = check_equal("s", "two", Fraction(1), Fraction(2), n=3)
    r = combine("s", "both", [ok, bad])
    assert not r.passed and r.checked == 2
    assert [f.relation for f in r.failures()] == ["two"]
    assert bad.witness == {"n": "3", "lhs": "1", "rhs": "2"}
    assert isinstance(r.to_json()["children"], list)
    assert VerificationReport("s", "r", True).status == "pass"


# ring properties --------------------------------------------------------------

@given(laurent(), laurent(), laurent())
def test_ring_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f
    assert f - f == 0


@given(laurent(), laurent(), points())
def test_evaluation_is_a_ring_homomorphism(f, g, x):
    assert laurent_eval(f * g, x) == laurent_eval(f, x) * laurent_eval(g, x)
    assert laurent_eval(f + g, x) == laurent_eval(f, x) + laurent_eval(g, x)


@given(laurent(), laurent().filter(lambda g: not g.is_zero()))
def test_exact_div_inverts_multiplication(f, g):
    assert exact_div(f * g, g) == f


@given(laurent(), nonzero, st.sampled_from([1, -1]), points())
def test_subs_matches_evaluation(f, s, power, x):
    assert laurent_eval(f.subs(s, power), x) == laurent_eval(f, s * x ** power)


@given(laurent())
def test_reflect_is_an_involution_and_symmetrizes(f):
    assert f.reflect().reflect() == f
    assert (f + f.reflect()).is_symmetric()


@given(small, small, small, small)
def test_mat2_det_multiplicative(a, b, c, d):
    m = Mat2(a, b, c, d)
    n = Mat2(b, c, d, a)
    assert (m @ n).det() == m.det() * n.det()
