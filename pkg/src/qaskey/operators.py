"""Every operator of the slice as a :class:`~qaskey.core.LinOp`.

Operators on Laurent polynomials are applied by putting all terms over a
common denominator and dividing exactly; a nonzero remainder raises
:class:`~qaskey.core.NotPolynomial`, so each formula transcription is checked
every time it is used.

Parameters are read from any object with attributes ``q, a, b, c, d``
(normally a :class:`~qaskey.families.ParamSet`).  The values may be rationals
or Laurent polynomials in the deformation variable ``t``; the latter is how
:mod:`qaskey.limitops` takes exact limits.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache

from .core import (DenominatorVanishes, Laurent, LinOp, Mat2, QaskeyError, RationalFunction,
                   Seq, Vec2, exact_div)
from .families import (X_FAMILIES, ParamSet, dual_params, family_name, recompose_factor, sigma, spectral, z_grid)


class GridCollision(QaskeyError):
    pass


def _P(p):
    """Parameters as a plain tuple (q, a, b, c, d)."""
    return p.q, p.a, p.b, p.c, p.d


def _qsum(facs: dict, terms, var: str = "z") -> Laurent:
    """Exact sum of coef * g / prod(facs[k] for k in keys) over the terms."""
    common = Counter()
    for _, keys, _ in terms:
        for k, v in Counter(keys).items():
            common[k] = max(common[k], v)
    num = Laurent({}, var)
    for coef, keys, g in terms:
        if not g:
            continue
        t = g * coef
        for k, v in (common - Counter(keys)).items():
            for _ in range(v):
                t = t * facs[k]
        num = num + t
    den = Laurent.const(1, var)
    for k, v in common.items():
        for _ in range(v):
            den = den * facs[k]
    return exact_div(num, den)


def _zfacs(q, var="z"):
    z = Laurent.gen(var)
    return {
        "1-z2": 1 - z * z,
        "q-z2": q - z * z,
        "1-qz2": 1 - q * z * z,
        "q2-z2": q * q - z * z,
        "z": z,
    }


def _up(f, q):
    return f.subs(q)


def _down(f, q):
    return f.subs(1 / q)


def _refl(f):
    return f.reflect()


def _qrefl(f, q):
    return f.subs(q, -1)


# ---------------------------------------------------------------------------
# q-difference operators L


def _L_aw(p, var="z"):
    q, a, b, c, d = _P(p)
    z = Laurent.gen(var)
    F = _zfacs(q, var)
    up_c = (1 - a * z) * (1 - b * z) * (1 - c * z) * (1 - d * z)
    dn_c = (a - z) * (b - z) * (c - z) * (d - z)
    const = 1 + a * b * c * d / q

    def fn(f):
        return _qsum(F, [
            (const, (), f),
            (up_c, ("1-z2", "1-qz2"), _up(f, q) - f),
            (dn_c, ("1-z2", "q-z2"), _down(f, q) - f),
        ], var)
    return fn


def _L_cdqh(p, var="z"):
    q, a, b, c, _ = _P(p)
    z = Laurent.gen(var)
    F = _zfacs(q, var)
    up_c = (1 - a * z) * (1 - b * z) * (1 - c * z)
    dn_c = -z * (a - z) * (b - z) * (c - z)

    def fn(f):
        return _qsum(F, [
            (up_c, ("1-z2", "1-qz2"), _up(f, q) - f),
            (dn_c, ("1-z2", "q-z2"), _down(f, q) - f),
            (1, (), f),
        ], var)
    return fn


def _L_asc(p, var="z"):
    q, a, b, _, _ = _P(p)
    z = Laurent.gen(var)
    F = _zfacs(q, var)
    up_c = (1 - a * z) * (1 - b * z)
    dn_c = z * z * (a - z) * (b - z)

    def fn(f):
        return _qsum(F, [
            (up_c, ("1-z2", "1-qz2"), _up(f, q) - f),
            (dn_c, ("1-z2", "q-z2"), _down(f, q) - f),
            (1, (), f),
        ], var)
    return fn


def _L_bqj(p, var="x"):
    q, a, b, c, _ = _P(p)
    x = Laurent.gen(var)
    F = {"x": x}
    up_c = q * a * c * (1 - x) * (1 - b / c * x)
    dn_c = (q * a - x) * (q * c - x)

    def fn(f):
        return _qsum(F, [
            (up_c, ("x", "x"), _up(f, q) - f),
            (dn_c, ("x", "x"), _down(f, q) - f),
            (1 + q * a * b, (), f),
        ], var)
    return fn


def _L_lqj(p, var="x"):
    q, a, b, _, _ = _P(p)
    x = Laurent.gen(var)
    F = {"x": x}
    up_c = -q * a * b * (1 - x)
    dn_c = -(q * a - x)

    def fn(f):
        return _qsum(F, [
            (up_c, ("x",), _up(f, q) - f),
            (dn_c, ("x",), _down(f, q) - f),
            (1 + q * a * b, (), f),
        ], var)
    return fn


_L_BUILDERS = {"AW": _L_aw, "CDqH": _L_cdqh, "ASC": _L_asc, "BqJ": _L_bqj, "LqJ": _L_lqj}


def _check_poly(fn):
    def wrapped(f):
        out = fn(f)
        if not out.is_polynomial():
            raise QaskeyError(f"image {out} has negative powers of x")
        return out
    return wrapped


def op_L(p: ParamSet, family: str | None = None) -> LinOp:
    """The family's q-difference operator L (symmetric Laurent or x-polynomial domain)."""
    fam = family or p.family
    fn = _L_BUILDERS[fam](p)
    if fam in X_FAMILIES:
        return LinOp(_check_poly(fn), f"L[{fam}]", "poly")
    return LinOp(fn, f"L[{fam}]", "symmetric")


# ---------------------------------------------------------------------------
# three-term recurrence operators M on g(n), n >= 0


def M_coefficients(p: ParamSet, n: int, family: str | None = None):
    """(up, mid, down) with M g(n) = up g(n+1) + mid g(n) + down g(n-1)."""
    fam = family or p.family
    q, a, b, c, d = _P(p)
    qn = q ** n
    if fam == "AW":
        abcd = a * b * c * d
        A = ((1 - a * b * qn) * (1 - a * c * qn) * (1 - a * d * qn) * (1 - abcd * qn / q)
             / (a * (1 - abcd * qn * qn / q) * (1 - abcd * qn * qn)))
        if n == 0:
            C = 0
        else:
            C = (a * (1 - qn) * (1 - b * c * qn / q) * (1 - b * d * qn / q) * (1 - c * d * qn / q)
                 / ((1 - abcd * qn * qn / (q * q)) * (1 - abcd * qn * qn / q)))
        return A, a + 1 / a - A - C, C
    if fam == "CDqH":
        A = (1 - a * b * qn) * (1 - a * c * qn) / a
        C = a * (1 - qn) * (1 - b * c * qn / q)
        return A, a + 1 / a - A - C, C
    if fam == "ASC":
        A = (1 - a * b * qn) / a
        C = a * (1 - qn)
        return A, a + 1 / a - A - C, C
    if fam == "BqJ":
        A = ((1 - a * b * q * qn) * (1 - a * q * qn) * (1 - c * q * qn)
             / ((1 - a * b * q * qn * qn) * (1 - a * b * q * q * qn * qn)))
        C = -(q * qn * a * c * (1 - qn) * (1 - b * qn) * (1 - a * b / c * qn)
              / ((1 - a * b * qn * qn) * (1 - a * b * q * qn * qn)))
        return A, 1 - A - C, C
    if fam == "LqJ":
        A = ((1 - a * b * q * qn) * (1 - a * q * qn)
             / ((1 - a * b * q * qn * qn) * (1 - a * b * q * q * qn * qn)))
        C = (q * qn * qn * a * a * b * (1 - qn) * (1 - b * qn)
             / ((1 - a * b * qn * qn) * (1 - a * b * q * qn * qn)))
        return A, 1 - A - C, C
    raise ValueError(fam)


def op_M(p: ParamSet, family: str | None = None) -> LinOp:
    """Three-term recurrence operator on sequences g(n), n >= 0; n = 0 never reads g(-1)."""
    fam = family or p.family

    @lru_cache(maxsize=None)
    def coeffs(n):
        return M_coefficients(p, n, fam)

    def fn(g):
        def at(n):
            up, mid, down = coeffs(n)
            out = up * g(n + 1) + mid * g(n)
            if n > 0:
                out = out + down * g(n - 1)
            return out
        return Seq(at)
    return LinOp(fn, f"M[{fam}]", "seq")


def op_Lambda(p: ParamSet, family: str | None = None) -> LinOp:
    fam = family or p.family

    def fn(g):
        return Seq(lambda n: eigenvalue_for(p, n, fam) * g(n))
    return LinOp(fn, f"Lambda[{fam}]", "seq")


def eigenvalue_for(p, n, fam):
    q = p.q
    if fam == "AW":
        return q ** (-n) + p.a * p.b * p.c * p.d * q ** (n - 1)
    if fam in ("CDqH", "ASC"):
        return q ** (-n)
    return q ** (-n) + q ** (n + 1) * p.a * p.b


def op_N(p: ParamSet) -> LinOp:
    """N g(m) = nu(m)^-1 g(m) on two-sided sequences."""
    def fn(g):
        return Seq(lambda m: g(m) / spectral("nu", p, m))
    return LinOp(fn, "N", "seq2")


# ---------------------------------------------------------------------------
# AW DAHA basic representation (scalar form)


def _T1(p, var="z"):
    q, a, b, _, _ = _P(p)
    z = Laurent.gen(var)
    F = _zfacs(q, var)
    c1 = (a + b) * z - (1 + a * b)
    c2 = (1 - a * z) * (1 - b * z)
    return lambda f: _qsum(F, [(c1, ("1-z2",), f), (c2, ("1-z2",), _refl(f))], var)


def _T1inv(p, var="z"):
    q, a, b, _, _ = _P(p)
    z = Laurent.gen(var)
    F = _zfacs(q, var)
    ab = a * b
    c1 = z * ((1 + ab) * z - (a + b)) / ab
    c2 = -(1 - a * z) * (1 - b * z) / ab
    return lambda f: _qsum(F, [(c1, ("1-z2",), f), (c2, ("1-z2",), _refl(f))], var)


def _T0(p, var="z"):
    q, a, b, c, d = _P(p)
    z = Laurent.gen(var)
    F = _zfacs(q, var)
    c1 = z * ((c * d + q) * z - (c + d) * q) / q
    c2 = -(c - z) * (d - z)
    return lambda f: _qsum(F, [(c1, ("q-z2",), f), (c2, ("q-z2",), _qrefl(f, q))], var)


def _T0inv(p, var="z"):
    q, a, b, c, d = _P(p)
    z = Laurent.gen(var)
    F = _zfacs(q, var)
    cd = c * d
    c1 = q * ((c + d) * z - (cd + q)) / cd
    c2 = q * (c - z) * (d - z) / cd
    return lambda f: _qsum(F, [(c1, ("q-z2",), f), (c2, ("q-z2",), _qrefl(f, q))], var)


def _Y(p, var="z"):
    q, a, b, c, d = _P(p)
    z = Laurent.gen(var)
    F = _zfacs(q, var)
    e = 1 + a * b - (a + b) * z
    c1 = z * e * ((c + d) * q - (c * d + q) * z) / q
    c2 = (1 - a * z) * (1 - b * z) * (1 - c * z) * (1 - d * z)
    c3 = (1 - a * z) * (1 - b * z) * ((c + d) * q * z - (c * d + q)) / q
    c4 = (c - z) * (d - z) * e

    def fn(f):
        return _qsum(F, [
            (c1, ("1-z2", "q-z2"), f),
            (c2, ("1-z2", "1-qz2"), _up(f, q)),
            (c3, ("1-z2", "1-qz2"), _refl(f)),
            (c4, ("1-z2", "q-z2"), _qrefl(f, q)),
        ], var)
    return fn


def _Yinv(p, var="z"):
    q, a, b, c, d = _P(p)
    z = Laurent.gen(var)
    F = _zfacs(q, var)
    abcd = a * b * c * d
    g = c * d + q - (c + d) * z
    c1 = q * z * (a + b - (1 + a * b) * z) * g / abcd
    c2 = q * (a * q - z) * (b * q - z) * (c - z) * (d - z) / abcd
    c3 = q * (1 - a * z) * (1 - b * z) * g / abcd
    c4 = q * q * (c - z) * (d - z) * ((a + b) * z - q * (1 + a * b)) / abcd

    def fn(f):
        return _qsum(F, [
            (c1, ("1-z2", "q-z2"), f),
            (c2, ("q-z2", "q2-z2"), _down(f, q)),
            (c3, ("1-z2", "q-z2"), _refl(f)),
            (c4, ("q-z2", "q2-z2"), _qrefl(f, q)),
        ], var)
    return fn


def _mult(m: Laurent):
    return lambda f: f * m


def op_daha(gen: str, p: ParamSet, var: str = "z") -> LinOp:
    """Generator of the AW DAHA in its basic representation on Laurent polynomials."""
    z = Laurent.gen(var)
    if gen == "Z":
        return LinOp(_mult(z), "Z")
    if gen == "Zinv":
        return LinOp(_mult(Laurent.mono(-1, 1, var)), "Zinv")
    table = {"T1": _T1, "T1inv": _T1inv, "T0": _T0, "T0inv": _T0inv, "Y": _Y, "Yinv": _Yinv}
    if gen in table:
        return LinOp(table[gen](p, var), gen)
    if gen == "D":
        Y = LinOp(_Y(p, var), "Y")
        Yi = LinOp(_Yinv(p, var), "Yinv")
        return LinOp((Y + Yi * (p.a * p.b * p.c * p.d / p.q)).fn, "D")
    if gen == "T1check":
        return op_daha("Zinv", p, var) @ op_daha("T1inv", p, var)
    if gen == "T0check":
        return op_daha("T0inv", p, var) @ op_daha("Z", p, var)
    raise ValueError(f"unknown generator {gen!r}")


# ---------------------------------------------------------------------------
# degenerate DAHA representations (scalar: CDqH, ASC, AWqB)


def _Y_cdqh(p, var="z"):
    q, a, b, c, _ = _P(p)
    z = Laurent.gen(var)
    F = _zfacs(q, var)
    c1 = z * (1 + a * b - (a + b) * z) * (c - z)
    c2 = (1 - a * z) * (1 - b * z) * (1 - c * z)

    def fn(f):
        return _qsum(F, [
            (c1, ("1-z2", "q-z2"), f - _qrefl(f, q)),
            (c2, ("1-z2", "1-qz2"), _up(f, q) - _refl(f)),
        ], var)
    return fn


def _Yprime_cdqh(p, var="z"):
    q, a, b, c, _ = _P(p)
    z = Laurent.gen(var)
    F = _zfacs(q, var)
    ab = a * b
    c1 = z * (a + b - (1 + ab) * z) * (q - c * z) / ab
    c2 = -z * (a * q - z) * (b * q - z) * (c - z) / ab
    c3 = (1 - a * z) * (1 - b * z) * (q - c * z) / ab
    c4 = -q * z * ((a + b) * z - q * (1 + ab)) * (c - z) / ab

    def fn(f):
        return _qsum(F, [
            (c1, ("1-z2", "q-z2"), f),
            (c2, ("q-z2", "q2-z2"), _down(f, q)),
            (c3, ("1-z2", "q-z2"), _refl(f)),
            (c4, ("q-z2", "q2-z2"), _qrefl(f, q)),
        ], var)
    return fn


def _T0prime_cdqh(p, var="z"):
    """Limit d -> 0 of q^-1 c d T0^-1."""
    q, a, b, c, _ = _P(p)
    z = Laurent.gen(var)
    F = _zfacs(q, var)
    c1 = c * z - q
    c2 = -(c - z) * z
    return lambda f: _qsum(F, [(c1, ("q-z2",), f), (c2, ("q-z2",), _qrefl(f, q))], var)


def _T0tilde_awqb(p, var="z"):
    q = p.q
    z = Laurent.gen(var)
    F = _zfacs(q, var)
    return lambda f: _qsum(F, [(z, ("q-z2",), _qrefl(f, q) - f)], var)


def _zero_d(p):
    return ParamSet(p.family, p.q, p.a, p.b, p.c, Fraction(0)) if isinstance(p, ParamSet) else p


def op_daha_degenerate(algebra: str, gen: str, p, var: str = "z") -> LinOp:
    """Generators of the degenerate DAHAs.

    CDqH/ASC: T1, T0, T0p (the primed T0), Y, Yp, Z, Zinv (ASC takes c = 0).
    AWqB: T1, T0t (the rescaled T0), Z, Zinv.
    BqJ/LqJ: 2x2 matrix operators X, Xp, T1, T1inv, Y, Yinv, T0, T0inv
    (LqJ takes c = 0).
    """
    algebra = family_name(algebra) if algebra.lower() != "awqb" else "AWqB"
    if algebra in ("BqJ", "LqJ"):
        from .limitops import bqj_matrix_op
        return bqj_matrix_op(gen, p, c_zero=(algebra == "LqJ"))
    if algebra == "ASC":
        p = _with(p, c=Fraction(0), d=Fraction(0))
    elif algebra in ("CDqH", "AWqB"):
        p = _with(p, d=Fraction(0))
    if gen in ("Z", "Zinv", "T1", "T1inv"):
        return op_daha(gen, p, var)
    if algebra == "AWqB":
        if gen == "T0t":
            return LinOp(_T0tilde_awqb(p, var), "T0t")
        raise ValueError(gen)
    table = {"T0": _T0, "T0p": _T0prime_cdqh, "Y": _Y_cdqh, "Yp": _Yprime_cdqh}
    if gen in table:
        return LinOp(table[gen](p, var), gen)
    raise ValueError(f"unknown generator {gen!r} for {algebra}")


def _with(p, **kw):
    vals = {"q": p.q, "a": p.a, "b": p.b, "c": p.c, "d": p.d}
    vals.update(kw)
    fam = getattr(p, "family", "AW")
    return ParamSet(fam, vals["q"], vals["a"], vals["b"], vals["c"], vals["d"])


# ---------------------------------------------------------------------------
# 2D realization


def _zero_like(f):
    return Laurent({}, f.var)


def vec2_decompose(f: Laurent, p) -> Vec2:
    """(f1, f2) with f = f1 + a z^-1 (1 - az)(1 - bz) f2, both symmetric."""
    a, b = p.a, p.b
    if a * b == 1:
        raise DenominatorVanishes(0, "(ab = 1)")
    var = f.var
    z = Laurent.gen(var)
    F = {"1-z2": 1 - z * z, "z": z}
    fr = f.reflect()
    k = a * b - 1
    f1 = _qsum(F, [((z - a) * (z - b) / k, ("1-z2",), f), (-(1 - a * z) * (1 - b * z) / k, ("1-z2",), fr)],
               var)
    # (f - f[1/z]) / (z - 1/z) = z (f - f[1/z]) / (z^2 - 1)
    f2 = _qsum(F, [(-z / (a * k), ("1-z2",), f - fr)], var)
    return Vec2(f1, f2)


def vec2_recompose(v: Vec2, p) -> Laurent:
    return v.x + recompose_factor(p, v.x.var) * v.y


def op_S(p, var="z") -> Mat2:
    z = Laurent.gen(var)
    zi = Laurent.mono(-1, 1, var)
    a, b = p.a, p.b
    return Mat2(Laurent.const(1, var), a * (1 - a * z) * (1 - b * z) * zi,
                Laurent.const(1, var), a * (a - z) * (b - z) * zi)


def op_S_inv(p, var="z") -> Mat2:
    """Inverse of S, with rational-function entries (it reproduces the decomposition f -> (f1, f2))."""
    z = Laurent.gen(var)
    zi = Laurent.mono(-1, 1, var)
    a, b = p.a, p.b
    den = (1 - a * b) * (z - zi)

    def r(num):
        return RationalFunction(num if isinstance(num, Laurent) else Laurent.const(num, var), den)
    return Mat2(r((a - z) * (b - z) * zi), r(-(1 - a * z) * (1 - b * z) * zi),
                r(Laurent.const(-1 / a, var)), r(Laurent.const(1 / a, var)))


class MatrixOp(LinOp):
    """2x2 operator matrix acting on Vec2; entries are LinOps or None (zero)."""

    __slots__ = ("entries",)

    def __init__(self, e11, e12, e21, e22, name="", domain="vec2-sym"):
        self.entries = (e11, e12, e21, e22)

        def fn(v):
            x, y = v.x, v.y

            def ap(op, u):
                if op is None or not u:
                    return _zero_like(u)
                return op(u)
            return Vec2(ap(e11, x) + ap(e12, y), ap(e21, x) + ap(e22, y))
        super().__init__(fn, name, domain)


def _scal(s, var="z"):
    return LinOp(lambda f: f * s, str(s), "symmetric")


def _Y21(p, var="z"):
    q, a, b, c, d = _P(p)
    z = Laurent.gen(var)
    F = _zfacs(q, var)
    k = a * (1 - a * b)
    c1 = z * (c - z) * (d - z) / k
    c2 = z * (1 - c * z) * (1 - d * z) / k
    return lambda g: _qsum(F, [(c1, ("1-z2", "q-z2"), _down(g, q) - g),
                               (c2, ("1-z2", "1-qz2"), _up(g, q) - g)], var)


def _Y12(p, var="z"):
    q, a, b, c, d = _P(p)
    z = Laurent.gen(var)
    F = _zfacs(q, var)
    k = a * a * b / (1 - a * b)
    c1 = k * (a - z) * (b - z) * (1 - a * z) * (1 - b * z) * ((c * d + q) * (1 + z * z) - (1 + q) * (c + d) * z)
    c2 = -k / q * (a - z) * (b - z) * (c - z) * (d - z) * (a * q - z) * (b * q - z)
    c3 = -k / q * (1 - a * z) * (1 - b * z) * (1 - c * z) * (1 - d * z) * (1 - a * q * z) * (1 - b * q * z)
    return lambda g: _qsum(F, [(c1, ("z", "q-z2", "1-qz2"), g),
                               (c2, ("z", "1-z2", "q-z2"), _down(g, q)),
                               (c3, ("z", "1-z2", "1-qz2"), _up(g, q))], var)


def _Y11(p, var="z"):
    q, a, b, c, d = _P(p)
    L = _L_aw(p, var)
    ab = a * b
    s = ab * (c * d / q + 1) / (1 - ab)
    k = -ab / (1 - ab)
    return lambda g: g * s + L(g) * k


def _Y22(p, var="z"):
    q, a, b, c, d = _P(p)
    L = _L_aw(_with(p, a=a * q, b=b * q), var)
    ab = a * b
    s = -ab * (c * d / q + 1) / (1 - ab)
    k = 1 / (q * (1 - ab))
    return lambda g: g * s + L(g) * k


def _matrix_Z(p, var="z", inverse=False):
    z = Laurent.gen(var)
    zi = Laurent.mono(-1, 1, var)
    a, b = p.a, p.b
    k = 1 / (a * b - 1)
    w = z + zi
    m11 = (a + b - w) * k
    m22 = (a * b * w - (a + b)) * k
    m12 = -a * (1 - a * z) * (1 - a * zi) * (1 - b * z) * (1 - b * zi) * k
    m21 = Laurent.const(k / a, var)
    if not inverse:
        return Mat2(m11, m12, m21, m22)
    return Mat2(m22, -m12, -m21, m11)


def _mat_to_op(M: Mat2, name, domain="vec2-sym"):
    def mk(e):
        if e == 0:
            return None
        return LinOp(_mult(e), "", "symmetric")
    return MatrixOp(mk(M.a), mk(M.b), mk(M.c), mk(M.d), name, domain)


def matrix_Z(p, var="z", inverse=False) -> Mat2:
    """Multiplication matrix of Z (or Z^-1) in the 2D realization."""
    return _matrix_Z(p, var, inverse)


def op_matrix(gen: str, p, var: str = "z") -> LinOp:
    """T1, T1inv, Y, Yinv, Z, Zinv as 2x2 matrix operators on (f1, f2)."""
    q, a, b, c, d = _P(p)
    if gen == "T1":
        return MatrixOp(_scal(-a * b), None, None, _scal(-1), "T1")
    if gen == "T1inv":
        return MatrixOp(_scal(-1 / (a * b)), None, None, _scal(-1), "T1inv")
    if gen == "Z":
        return _mat_to_op(_matrix_Z(p, var), "Z")
    if gen == "Zinv":
        return _mat_to_op(_matrix_Z(p, var, True), "Zinv")
    if gen == "Y":
        return MatrixOp(LinOp(_Y11(p, var)), LinOp(_Y12(p, var)), LinOp(_Y21(p, var)),
                        LinOp(_Y22(p, var)), "Y")
    if gen == "Yinv":
        T1i = op_matrix("T1inv", p, var)
        Y = op_matrix("Y", p, var)
        k = q / (c * d)
        return LinOp((T1i @ Y @ T1i * (-k) + T1i * (-(1 + k))).fn, "Yinv", "vec2-sym")
    raise ValueError(gen)


def conjugated(op: LinOp, p) -> LinOp:
    """The 2D form decompose o op o recompose of a scalar operator."""
    return LinOp(lambda v: vec2_decompose(op(vec2_recompose(v, p)), p), f"vec({op.name})",
                 "vec2-sym")


# ---------------------------------------------------------------------------
# non-symmetric recurrences


def nonsym_M_coefficients(p, n: int):
    """Coefficients of g(n), g(n-1), g(-n), g(-n-1) in the E_n recurrence."""
    q, a, b, c, d = _P(p)
    abcd = a * b * c * d
    nu = spectral("nu", p, n)
    big = 1 + a * b - a * b * (c * d / q + 1) * nu
    dq = (q - abcd * nu * nu) * (q - abcd * nu * nu / q)
    d1 = (1 - abcd * nu * nu / q) * (1 - abcd * nu * nu)
    k0 = nu * big * (q * (c + d) - c * d * (a + b) * nu) / dq
    head = (1 - abcd * nu / q) * (1 - a * b * nu)
    k1 = head * (1 - a * c * nu) * (1 - a * d * nu) / (a * d1)
    k2 = head * (a * b * (c + d) * nu - (a + b)) / (a * b * d1)
    k3 = q * q * (1 - b * c * nu / q) * (1 - b * d * nu / q) * big / (b * dq)
    return k0, k1, k2, k3


def bqj_M_coefficients(p, n: int):
    q, a, b, c, _ = _P(p)
    mu = spectral("mu", p, n)
    ab = a * b
    k0 = mu * (ab * mu - c) * (a * (1 + b) * q * mu - 1 - q * a) / ((ab * mu * mu - 1) * (ab * q * mu * mu - 1))
    k1 = ((1 - a * q * mu) * (1 - ab * q * mu) * (1 - c * q * mu)
          / ((ab * q * q * mu * mu - 1) * (ab * q * mu * mu - 1)))
    return k0, k1


def op_nonsym_recurrence(p, family: str | None = None) -> LinOp:
    """Four-point recurrence on two-sided sequences (AW form or the BqJ analogue)."""
    fam = family or getattr(p, "family", "AW")
    if fam in X_FAMILIES:
        @lru_cache(maxsize=None)
        def kb(n):
            return bqj_M_coefficients(p, n)

        def fnb(g):
            def at(n):
                k0, k1 = kb(n)
                out = k0 * (g(n) - g(-1 - n))
                if k1 != 0:
                    out = out + k1 * (g(n - 1) - g(-n))
                return out
            return Seq(at)
        return LinOp(fnb, "Mtilde[BqJ]", "seq2")

    @lru_cache(maxsize=None)
    def k(n):
        return nonsym_M_coefficients(p, n)

    def fn(g):
        def at(n):
            k0, k1, k2, k3 = k(n)
            out = k0 * g(n) + k3 * g(-n - 1)
            # at n = 0 the g(n-1) and g(-n) coefficients vanish identically
            if k1 != 0:
                out = out + k1 * g(n - 1)
            if k2 != 0:
                out = out + k2 * g(-n)
            return out
        return Seq(at)
    return LinOp(fn, "M[nonsym]", "seq2")


# ---------------------------------------------------------------------------
# dual side: the restriction of T1 to the grid, and U


def T_script_coefficients(p, m: int):
    """(alpha, beta): T_script g(m) = alpha g(m) + beta g(-m).

    T_script attached to parameters p is the restriction of T1 for the dual
    parameters to the grid z_{a~,q}(m)^-1, so that T_script for the dual
    parameters restricts T1 for p itself.
    """
    dp = dual_params(p) if isinstance(p, ParamSet) else p
    return _t1_restriction(dp.a, dp.b, p.q, m)


def _t1_restriction(a, b, q, m):
    pt = 1 / z_grid(a, q, m)
    den = 1 - pt * pt
    if den == 0:
        raise GridCollision(f"grid point {pt} is a fixed point of z -> 1/z")
    alpha = ((a + b) * pt - (1 + a * b)) / den
    beta = (1 - a * pt) * (1 - b * pt) / den
    if m != 0 and z_grid(a, q, m) == z_grid(a, q, -m):
        raise GridCollision(f"grid points for m={m} and -m coincide")
    return alpha, beta


def U_coefficients(p, n: int):
    """(alpha, beta) with T vecE_n = alpha vecE_n + beta vecE_-n (alpha = -ab, beta = 0 at n = 0)."""
    ab = p.a * p.b
    if n == 0:
        return -ab, Fraction(0)
    s_p, s_m = sigma(p, n), sigma(p, -n)
    if s_p == s_m:
        raise GridCollision(f"sigma({n}) = sigma({-n})")
    alpha = (ab * s_m - s_p) / (s_p - s_m)
    return alpha, -ab - alpha


def op_dual_side(gen: str, p) -> LinOp:
    if gen in ("T_script", "T"):
        @lru_cache(maxsize=None)
        def co(m):
            return T_script_coefficients(p, m)

        def fn(g):
            def at(m):
                al, be = co(m)
                return al * g(m) if m == 0 else al * g(m) + be * g(-m)
            return Seq(at)
        return LinOp(fn, "T_script", "seq2")
    if gen == "U":
        @lru_cache(maxsize=None)
        def cu(n):
            return U_coefficients(p, n)

        def fnu(g):
            def at(n):
                al, be = cu(n)
                return al * g(n) if n == 0 else al * g(n) + be * g(-n)
            return Seq(at)
        return LinOp(fnu, "U", "seq2")
    raise ValueError(gen)


# ---------------------------------------------------------------------------
# catalog


CATALOG = [
    {"name": "L", "family": f, "domain": "x-polynomial" if f in X_FAMILIES else "symmetric-Laurent"}
    for f in ("AW", "CDqH", "ASC", "BqJ", "LqJ")
] + [
    {"name": "M", "family": f, "domain": "sequence"} for f in ("AW", "CDqH", "ASC", "BqJ", "LqJ")
] + [
    {"name": "Lambda", "family": f, "domain": "sequence"} for f in ("AW", "CDqH", "ASC", "BqJ", "LqJ")
] + [
    {"name": "N", "family": "AW", "domain": "sequence"},
] + [
    {"name": g, "family": "AW", "domain": "Laurent"}
    for g in ("Z", "Zinv", "T1", "T1inv", "T0", "T0inv", "Y", "Yinv", "D")
] + [
    {"name": g, "family": "CDqH", "domain": "Laurent"} for g in ("T0", "T0p", "Y", "Yp")
] + [
    {"name": "T0t", "family": "AWqBessel", "domain": "Laurent"},
] + [
    {"name": g, "family": "BqJ", "domain": "vec2"} for g in ("X", "Xp", "T1", "Y", "Yinv", "T0")
] + [
    {"name": g, "family": "AW", "domain": "vec2"} for g in ("T1", "T1inv", "Y", "Yinv", "Z", "Zinv", "S")
] + [
    {"name": "M_nonsym", "family": "AW", "domain": "sequence"},
    {"name": "Mtilde", "family": "BqJ", "domain": "sequence"},
    {"name": "T_script", "family": "AW", "domain": "sequence"},
    {"name": "U", "family": "AW", "domain": "sequence"},
]


def catalog():
    return [dict(e) for e in CATALOG]
