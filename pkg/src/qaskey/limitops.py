"""Exact limits of Askey-Wilson operators, and the big q-Jacobi matrix DAHA.

The substitution (a, b, c, d) -> (t, qa/t, qc/t, bt/c) sends AW to big
q-Jacobi as t -> 0, with x = t (z + 1/z).  Operators are evaluated with t a
formal Laurent variable (and the BqJ parameter c optionally a formal variable
``s``, so that c = 0 can be reached).  A limit exists when no negative power of
t survives; the limit is the t^0 coefficient.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from types import SimpleNamespace

from .core import Laurent, LinOp, QaskeyError
from .operators import MatrixOp, _Y11, _Y12, _Y21, _Y22, _L_aw

T, S = "t", "s"


class NoLimit(QaskeyError):
    pass


def t_params(q, a, b, c):
    """AW parameters (t, qa/t, qc/t, bt/c) with t formal; c may be a Laurent in s."""
    t = Laurent.gen(T)
    ti = Laurent.mono(-1, 1, T)
    return SimpleNamespace(q=q, a=t, b=ti * (q * a), c=ti * q * c, d=t * b / c, family="AW")


@lru_cache(maxsize=None)
def _w_power(k: int, var: str = "z") -> Laurent:
    w = Laurent({1: 1, -1: 1}, var)
    return w ** k


def lift(P: Laurent, var: str = "z") -> Laurent:
    """P(x) -> P(t (z + 1/z)) as a z-Laurent with t coefficients."""
    out = Laurent({}, var)
    t = Laurent.gen(T)
    for k, v in P.c.items():
        out = out + _w_power(k, var) * (t ** k * v)
    return out


def to_x_poly(F: Laurent, xvar: str = "x") -> dict:
    """Symmetric F(z) -> {k: coefficient of x^k} with x = t (z + 1/z)."""
    if not F.is_symmetric():
        raise QaskeyError("image is not symmetric")
    out = {}
    rest = F
    while rest:
        k = rest.degree()
        c = rest.coeff(k)
        out[k] = c * Laurent.mono(-k, 1, T)
        rest = rest - _w_power(k, F.var) * c
    return out


def t_zero(v):
    """t^0 coefficient, after checking that v has no negative t powers."""
    if isinstance(v, Laurent) and v.var == T:
        if v.c and min(v.c) < 0:
            raise NoLimit(f"negative power t^{min(v.c)} in {v}")
        return v.coeff(0)
    return v


def _s_value(v, c):
    """Evaluate an s-Laurent at s = c, refusing negative powers when c = 0."""
    if isinstance(v, Laurent) and v.var == S:
        if c == 0 and v.c and min(v.c) < 0:
            raise NoLimit(f"negative power of c in {v}")
        return v.evaluate(c) if c != 0 else v.coeff(0)
    return v


def limit_poly_image(fn, P: Laurent, c_value, xvar="x") -> Laurent:
    """lim_{t->0} of fn(lift(P)) read back as a polynomial in x."""
    img = to_x_poly(fn(lift(P)))
    out = {}
    for k, v in img.items():
        out[k] = _s_value(t_zero(v), c_value)
    return Laurent(out, xvar)


@lru_cache(maxsize=None)
def _entry_image(q, a, b, c, entry: str, k: int) -> Laurent:
    cs = Laurent.gen(S)
    tp = t_params(q, a, b, cs)
    op = {"11": _Y11, "12": _Y12, "21": _Y21, "22": _Y22, "L": _L_aw}[entry](tp)
    return limit_poly_image(op, Laurent({k: 1}, "x"), c)


def _apply_entry(q, a, b, c, entry, P: Laurent) -> Laurent:
    out = Laurent({}, P.var)
    for k, v in P.c.items():
        img = _entry_image(q, a, b, c, entry, k)
        out = out + Laurent(img.c, P.var) * v
    return out


def bqj_Y_entry(p, entry: str) -> LinOp:
    q, a, b, c = p.q, p.a, p.b, p.c
    return LinOp(lambda P: _apply_entry(q, a, b, c, entry, P), f"Y{entry}[BqJ]", "poly")


def bqj_L_limit(p) -> LinOp:
    """The AW operator L in the big q-Jacobi limit (equals the BqJ L)."""
    return bqj_Y_entry(p, "L")


def bqj_matrix(gen: str, p, var: str = "x"):
    """Multiplication matrices X, Xp and diagonal T1 entries for BqJ(a, b, c)."""
    q, a = p.q, p.a
    x = Laurent.gen(var)
    k = 1 / (q * a - 1)
    if gen == "X":
        return ((q * a - x) * k, q * a * (x - 1) * (q * a - x) * k, Laurent.const(k, var), q * a * (x - 1) * k)
    if gen == "Xp":
        return (q * a * (x - 1) * k, -q * a * (x - 1) * (q * a - x) * k, Laurent.const(-k, var), (q * a - x) * k)
    raise ValueError(gen)


def _mult(m):
    return None if not m else LinOp(lambda f: f * m, "", "poly")


def _scal(s):
    return LinOp(lambda f: f * s, str(s), "poly")


def bqj_matrix_op(gen: str, p, c_zero: bool = False) -> LinOp:
    """Generators of the BqJ (or LqJ, c = 0) matrix DAHA on pairs of x-polynomials.

    X, Xp, T1, T1inv, Y, Yinv, T0, T0inv.
    """
    if c_zero and p.c != 0:
        p = SimpleNamespace(q=p.q, a=p.a, b=p.b, c=Fraction(0), d=Fraction(0), family="LqJ")
    q, a, b = p.q, p.a, p.b
    if gen in ("X", "Xp"):
        m = bqj_matrix(gen, p)
        return MatrixOp(*(_mult(e) for e in m), name=gen, domain="vec2-poly")
    if gen == "T1":
        return MatrixOp(_scal(-q * a), None, None, _scal(-1), "T1", "vec2-poly")
    if gen == "T1inv":
        return MatrixOp(_scal(-1 / (q * a)), None, None, _scal(-1), "T1inv", "vec2-poly")
    if gen == "Y":
        return MatrixOp(bqj_Y_entry(p, "11"), bqj_Y_entry(p, "12"), bqj_Y_entry(p, "21"),
                        bqj_Y_entry(p, "22"), "Y", "vec2-poly")
    T1i = bqj_matrix_op("T1inv", p)
    Y = bqj_matrix_op("Y", p)
    if gen == "Yinv":
        return LinOp((T1i @ Y @ T1i * (-1 / b) + T1i * (-(1 + 1 / b))).fn, "Yinv", "vec2-poly")
    if gen == "T0":
        return LinOp((T1i @ Y).fn, "T0", "vec2-poly")
    if gen == "T0inv":
        T0 = T1i @ Y
        return LinOp((T0 * (-1 / b) + _vec_scalar(-(1 + b) / b)).fn, "T0inv", "vec2-poly")
    raise ValueError(f"unknown BqJ generator {gen!r}")


def _vec_scalar(s):
    return LinOp(lambda v: v * s, str(s), "vec2-poly")
