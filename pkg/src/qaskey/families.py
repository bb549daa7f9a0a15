"""Polynomial families of the q-Askey slice, their spectral data and duals.

Two independent evaluation paths exist for every family:

* ``eval_*`` functions sum the terminating series numerically at a point;
* ``*_laurent`` / ``*_poly`` functions build the polynomial itself as a
  :class:`~qaskey.core.Laurent` (used by the operator checks).

Conventions.  Askey-Wilson type families (AW, CDqH, ASC) live in a variable
``z`` and are symmetric Laurent polynomials; CDqH is AW with ``d = 0`` and ASC
is CDqH with ``c = 0``.  Big q-Jacobi type families (BqJ, LqJ) are ordinary
polynomials in ``x``; LqJ here means ``P_n(x; a, b) = P_n(x; a, b, 0)``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .core import (DenominatorVanishes, Laurent, NotRationalSquare, QaskeyError, Q, Vec2,
                   rational_sqrt)
from .qseries import phi_infinite_float, phi_terminating, qpoch

FAMILIES = ("AW", "CDqH", "ASC", "BqJ", "LqJ", "AWqBessel")
LAURENT_FAMILIES = ("AW", "CDqH", "ASC")
X_FAMILIES = ("BqJ", "LqJ")

_FAMILY_ALIASES = {
    "aw": "AW", "cdqh": "CDqH", "asc": "ASC", "bqj": "BqJ", "lqj": "LqJ",
    "awqb": "AWqBessel", "awqbessel": "AWqBessel",
}


def family_name(name: str) -> str:
    try:
        return _FAMILY_ALIASES[name.lower()]
    except KeyError:
        raise ValueError(f"unknown family {name!r}") from None


class InvalidParams(QaskeyError):
    pass


@dataclass(frozen=True)
class ParamSet:
    """Parameters (q, a, b, c, d); absent parameters are stored as 0."""

    family: str
    q: Fraction
    a: Fraction
    b: Fraction
    c: Fraction = Fraction(0)
    d: Fraction = Fraction(0)

    def with_(self, **kw) -> "ParamSet":
        return replace(self, **kw)

    def as_family(self, family: str) -> "ParamSet":
        return replace(self, family=family)

    @property
    def abcd(self):
        return self.a * self.b * self.c * self.d

    def inverted(self) -> "ParamSet":
        """(a, b, c, d, q) -> inverses; only for AW with all parameters nonzero."""
        return replace(self, q=1 / self.q, a=1 / self.a, b=1 / self.b, c=1 / self.c, d=1 / self.d)

    def negated(self) -> "ParamSet":
        return replace(self, a=-self.a, b=-self.b, c=-self.c, d=-self.d)

    def to_json(self):
        out = {"family": self.family, "q": str(self.q), "a": str(self.a), "b": str(self.b)}
        if self.family in ("AW", "CDqH", "BqJ") or self.c:
            out["c"] = str(self.c)
        if self.family == "AW" or self.d:
            out["d"] = str(self.d)
        return out

    def validate(self, m_max: int = 12) -> "ParamSet":
        check_params(self, m_max)
        return self


def make_params(family: str, q, a, b, c=0, d=0, validate=True, m_max=12) -> ParamSet:
    family = family_name(family) if family not in FAMILIES else family
    if family in ("CDqH", "BqJ"):
        d = 0
    if family in ("ASC", "LqJ"):
        c = d = 0
    p = ParamSet(family, Q(q), Q(a), Q(b), Q(c), Q(d))
    if validate:
        check_params(p, m_max)
    return p


def check_params(p: ParamSet, m_max: int = 12):
    """Generic-position constraints, checked for m up to ``m_max``."""
    q = p.q
    if q == 0:
        raise InvalidParams("q must be nonzero")
    for m in range(1, m_max + 1):
        if q ** m == 1:
            raise InvalidParams(f"q^{m} = 1")
    present = {"AW": "abcd", "CDqH": "abc", "BqJ": "abc", "ASC": "ab", "LqJ": "ab",
               "AWqBessel": "ab"}[p.family]
    for name in present:
        if getattr(p, name) == 0:
            raise InvalidParams(f"parameter {name} must be nonzero")
    if p.family == "AW":
        for m in range(0, m_max + 1):
            if p.abcd == q ** (-m):
                raise InvalidParams(f"abcd = q^-{m}")
    # lower parameters of the defining series must not hit zero
    if p.family in LAURENT_FAMILIES:
        lows = [p.a * p.b, p.a * p.c, p.a * p.d]
    elif p.family in X_FAMILIES:
        lows = [p.a * q, p.c * q]
    else:
        lows = [p.a * p.b]
    for lo in lows:
        for k in range(m_max):
            if lo != 0 and 1 - lo * q ** k == 0:
                raise InvalidParams(f"lower parameter {lo} makes (.;q)_{k + 1} vanish")


# Default parameter sets -------------------------------------------------------
P1 = ParamSet("AW", Fraction(1, 4), Fraction(1, 2), Fraction(1, 2), Fraction(1, 3), Fraction(3))
P2 = ParamSet("AW", Fraction(1, 2), Fraction(1, 3), Fraction(1, 5), Fraction(2, 7), Fraction(3, 11))
P2_TRIPLE = ParamSet("CDqH", Fraction(1, 2), Fraction(1, 3), Fraction(1, 5), Fraction(2, 7))
P2_PAIR = ParamSet("ASC", Fraction(1, 2), Fraction(1, 3), Fraction(1, 5))
# floating set for the orthogonality suites
P3 = (0.5, 0.9, -0.7, 0.6, 0.3)

PRESETS = {"P1": P1, "P2": P2, "P2_TRIPLE": P2_TRIPLE, "P2_PAIR": P2_PAIR}


def preset_for(name: str, family: str) -> ParamSet:
    """A named preset restricted to ``family`` (extra parameters dropped)."""
    base = PRESETS[name]
    family = family_name(family) if family not in FAMILIES else family
    return make_params(family, base.q, base.a, base.b, base.c, base.d)


# Dual parameters --------------------------------------------------------------


@dataclass(frozen=True)
class DualParams:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    branch: int = 1

    def as_params(self, q) -> ParamSet:
        return ParamSet("AW", q, self.a, self.b, self.c, self.d)


def dual_params(p: ParamSet, branch: int = 1) -> DualParams:
    """Dual parameters: a~ = (abcd/q)^(1/2), b~ = ab/a~, c~ = ac/a~, d~ = ad/a~."""
    if branch not in (1, -1):
        raise ValueError("branch must be +1 or -1")
    at = branch * rational_sqrt(p.abcd / p.q)
    if at == 0:
        raise NotRationalSquare("abcd = 0 has no usable dual")
    return DualParams(at, p.a * p.b / at, p.a * p.c / at, p.a * p.d / at, branch)


def dual_paramset(p: ParamSet, branch: int = 1) -> ParamSet:
    return dual_params(p, branch).as_params(p.q)


def cdqh_to_bqj(p: ParamSet) -> ParamSet:
    """The rational side of the CDqH/BqJ duality: (a, b, c) -> (ab/q, a/b, ac/q)."""
    q = p.q
    return make_params("BqJ", q, p.a * p.b / q, p.a / p.b, p.a * p.c / q, validate=False)


def bqj_to_cdqh(p: ParamSet) -> ParamSet:
    """Inverse of :func:`cdqh_to_bqj` on its image, expressed rationally.

    The square-root formulas (qab)^(1/2), (qa/b)^(1/2), (q/(ab))^(1/2) c are
    evaluated exactly and must be rational.
    """
    q = p.q
    at = rational_sqrt(q * p.a * p.b)
    bt = rational_sqrt(q * p.a / p.b)
    ct = q / at * p.c
    return make_params("CDqH", q, at, bt, ct, validate=False)


def asc_to_lqj(p: ParamSet) -> ParamSet:
    q = p.q
    return make_params("LqJ", q, p.a * p.b / q, p.a / p.b, validate=False)


# Series evaluation ------------------------------------------------------------


def _aw_series_args(p: ParamSet, n: int, z):
    q, a, b, c, d = p.q, p.a, p.b, p.c, p.d
    num = [q ** (-n), q ** (n - 1) * a * b * c * d, a * z, a / z]
    den = [a * b, a * c, a * d]
    return num, den


def _bqj_series_args(p: ParamSet, n: int, x):
    q, a, b, c = p.q, p.a, p.b, p.c
    return [q ** (-n), q ** (n + 1) * a * b, x], [a * q, c * q]


def eval_family(p: ParamSet, n: int, point, form: str = "2phi1") -> Fraction:
    """Exact value of the family's n-th polynomial at ``point``.

    AW/CDqH/ASC: R_n[z]; BqJ: P_n(x; a, b, c).  For LqJ the default is the
    little q-Jacobi polynomial p_n(x; a, b; q) (``form`` "2phi1" or "3phi2");
    ``form="P"`` gives P_n(x; a, b) = P_n(x; a, b, 0), the eigenfunction of
    the LqJ operator L.
    The lower parameters that vanish for a degenerate family (ad for CDqH,
    ac and ad for ASC) enter as 0, i.e. as factors (0; q)_k = 1.
    """
    if n < 0:
        raise ValueError("degree must be non-negative")
    point = Q(point) if isinstance(point, (int, str)) else point
    if p.family == "LqJ" and form != "P":
        return little_q_jacobi(n, point, p.a, p.b, p.q, form)
    if p.family in LAURENT_FAMILIES:
        if point == 0:
            raise ValueError("point must be nonzero")
        num, den = _aw_series_args(p, n, point)
    elif p.family in X_FAMILIES:
        num, den = _bqj_series_args(p, n, point)
    else:
        raise ValueError(f"eval_family does not cover {p.family}")
    # drop zero upper/lower parameters: (0; q)_k = 1
    num = [u for u in num if u != 0]
    den = [v for v in den if v != 0]
    return _phi_plain(num, den, p.q, n)


def _phi_plain(num, den, q, n):
    """sum_k prod (num;q)_k / prod (den;q)_k / (q;q)_k * q^k, k <= n.

    Zero parameters are already removed so no balancing factor applies.
    """
    total = Fraction(1)
    term = Fraction(1)
    for k in range(n):
        numf = 1
        for u in num:
            numf *= 1 - u * q ** k
        if numf == 0:
            break
        denf = 1 - q ** (k + 1)
        for j, v in enumerate(den):
            f = 1 - v * q ** k
            if f == 0:
                raise DenominatorVanishes(k, f"(lower parameter {v})")
            denf *= f
        term = term * numf / denf * q
        total += term
    return total


def little_q_jacobi(n: int, x, a, b, q, form: str = "2phi1") -> Fraction:
    """p_n(x; a, b; q) as 2phi1(q^-n, abq^(n+1); aq; q, qx), or via the 3phi2 form."""
    x, a, b, q = Q(x), Q(a), Q(b), Q(q)
    if form == "2phi1":
        return phi_terminating([q ** (-n), a * b * q ** (n + 1)], [a * q], q, q * x, n + 1)
    if form == "3phi2":
        pref = (-q * b) ** (-n) * q ** (-(n * (n - 1) // 2)) * qpoch(q * b, q, n) / qpoch(q * a, q, n)
        body = _phi_plain([q ** (-n), q ** (n + 1) * a * b, q * b * x], [q * b], q, n)
        return pref * body
    raise ValueError(form)


def little_q_jacobi_float(n: int, x, a, b, q) -> float:
    """Floating p_n(x; a, b; q) from the 2phi1 form."""
    total = 1.0
    term = 1.0
    for k in range(n):
        term *= (1 - q ** (-n + k)) * (1 - a * b * q ** (n + 1 + k)) / ((1 - a * q ** (k + 1)) * (1 - q ** (k + 1))) * q * x
        total += term
    return total


def eigenvalue(p: ParamSet, n: int) -> Fraction:
    """Eigenvalue of L on the n-th polynomial."""
    q = p.q
    if p.family in LAURENT_FAMILIES:
        return q ** (-n) + p.abcd * q ** (n - 1)
    if p.family in X_FAMILIES:
        return q ** (-n) + q ** (n + 1) * p.a * p.b
    raise ValueError(p.family)


# Laurent / polynomial constructions --------------------------------------------


def R_laurent(p: ParamSet, n: int, var: str = "z") -> Laurent:
    """R_n[z] for AW/CDqH/ASC as an exact Laurent polynomial."""
    q, a, b, c, d = p.q, p.a, p.b, p.c, p.d
    z = Laurent.gen(var)
    zi = Laurent.mono(-1, 1, var)
    upper = [q ** (-n), q ** (n - 1) * a * b * c * d]
    lower = [a * b, a * c, a * d]
    total = Laurent.const(1, var)
    poly = Laurent.const(1, var)  # (az, a/z; q)_k
    scal = Fraction(1)
    for k in range(n):
        f = 1
        for u in upper:
            f = f * (1 - u * q ** k)
        g = 1 - q ** (k + 1)
        for v in lower:
            fac = 1 - v * q ** k
            if fac == 0:
                raise DenominatorVanishes(k, f"(lower parameter {v})")
            g = g * fac
        scal = scal * f / g * q
        poly = poly * (1 - a * q ** k * z) * (1 - a * q ** k * zi)
        total = total + poly * scal
    return total


def P_poly(p: ParamSet, n: int, var: str = "x") -> Laurent:
    """P_n(x; a, b, c) (c = 0 for LqJ) as an exact polynomial in x."""
    q, a, b, c = p.q, p.a, p.b, p.c
    x = Laurent.gen(var)
    upper = [q ** (-n), q ** (n + 1) * a * b]
    lower = [a * q, c * q]
    total = Laurent.const(1, var)
    poly = Laurent.const(1, var)
    scal = Fraction(1)
    for k in range(n):
        f = 1
        for u in upper:
            f = f * (1 - u * q ** k)
        g = 1 - q ** (k + 1)
        for v in lower:
            fac = 1 - v * q ** k
            if fac == 0:
                raise DenominatorVanishes(k, f"(lower parameter {v})")
            g = g * fac
        scal = scal * f / g * q
        poly = poly * (1 - q ** k * x)
        total = total + poly * scal
    return total


def family_poly(p: ParamSet, n: int) -> Laurent:
    if p.family in LAURENT_FAMILIES:
        return R_laurent(p, n)
    if p.family in X_FAMILIES:
        return P_poly(p, n)
    raise ValueError(p.family)


def shifted_ab(p: ParamSet) -> ParamSet:
    """(qa, qb, c, d): parameters of the second component of the 2D realization."""
    return replace(p, a=p.q * p.a, b=p.q * p.b)


def _nonsym_den(p: ParamSet):
    q, a, b, c, d = p.q, p.a, p.b, p.c, p.d
    den = (1 - q * a * b) * (1 - a * b) * (1 - a * c) * (1 - a * d)
    if den == 0:
        raise DenominatorVanishes(0, "(1-qab)(1-ab)(1-ac)(1-ad)")
    return den


def sigma(p: ParamSet, n: int) -> Fraction:
    """sigma(n) of the 2D realization (the n = 0 value is 0)."""
    q, a, b, c, d = p.q, p.a, p.b, p.c, p.d
    if n >= 0:
        return q ** (1 - n) * (1 - q ** n) * (1 - q ** (n - 1) * c * d)
    k = -n
    return q ** (1 - k) * (1 - q ** k * a * b) * (1 - q ** (k - 1) * a * b * c * d) / (a * b)


def vecE_laurent(p: ParamSet, n: int, var: str = "z") -> Vec2:
    """Vector form (f1, f2) of E_n for AW/CDqH/ASC, or of the BqJ/LqJ vector family."""
    if p.family in X_FAMILIES:
        return vecE_bqj_poly(p, n, var if var != "z" else "x")
    k = abs(n)
    first = R_laurent(p, k, var)
    if n == 0:
        return Vec2(first, Laurent({}, var))
    second = R_laurent(shifted_ab(p), k - 1, var) * (-sigma(p, n) / _nonsym_den(p))
    return Vec2(first, second)


def recompose_factor(p: ParamSet, var: str = "z") -> Laurent:
    """a z^-1 (1 - az)(1 - bz)."""
    z = Laurent.gen(var)
    return p.a * Laurent.mono(-1, 1, var) * (1 - p.a * z) * (1 - p.b * z)


def E_laurent(p: ParamSet, n: int, var: str = "z") -> Laurent:
    """Non-symmetric E_n[z] (AW, CDqH via d = 0, ASC via c = d = 0)."""
    q, a, b, c, d = p.q, p.a, p.b, p.c, p.d
    z = Laurent.gen(var)
    k = abs(n)
    R = R_laurent(p, k, var)
    if n == 0:
        return R
    den = _nonsym_den(p)
    fac = Laurent.mono(-1, 1, var) * (1 - a * z) * (1 - b * z) * R_laurent(shifted_ab(p), k - 1, var)
    if n > 0:
        coef = q ** (1 - k) * (1 - q ** k) * (1 - q ** (k - 1) * c * d) / den * a
    else:
        coef = q ** (1 - k) * (1 - q ** k * a * b) * (1 - q ** (k - 1) * a * b * c * d) / den / b
    return R - fac * coef


def eval_nonsym_E(p: ParamSet, n: int, z) -> Fraction:
    """E_n[z] assembled from pointwise series values."""
    if p.family not in LAURENT_FAMILIES:
        raise ValueError("non-symmetric E_n is defined for AW, CDqH and ASC")
    z = Q(z)
    q, a, b, c, d = p.q, p.a, p.b, p.c, p.d
    k = abs(n)
    R = eval_family(p, k, z)
    if n == 0:
        return R
    den = _nonsym_den(p)
    R1 = eval_family(shifted_ab(p), k - 1, z)
    fac = (1 - a * z) * (1 - b * z) / z * R1
    if n > 0:
        coef = q ** (1 - k) * (1 - q ** k) * (1 - q ** (k - 1) * c * d) / den * a
    else:
        coef = q ** (1 - k) * (1 - q ** k * a * b) * (1 - q ** (k - 1) * a * b * c * d) / den / b
    return R - coef * fac


def bqj_vec_coeff(p: ParamSet, n: int) -> Fraction:
    """Scalar in front of P_{n-1}(qx; q^2 a, b, qc) in the BqJ vector family."""
    q, a, b, c = p.q, p.a, p.b, p.c
    den = (1 - q * a) * (1 - q * q * a) * (1 - q * c)
    if den == 0:
        raise DenominatorVanishes(0, "(1-qa)(1-q^2a)(1-qc)")
    if n >= 0:
        return -q ** (1 - n) * (1 - q ** n) * (1 - q ** n * b) / den
    k = -n
    return -q ** (-k) * (1 - q ** (k + 1) * a) * (1 - q ** (k + 1) * a * b) / (a * den)


def bqj_shifted(p: ParamSet) -> ParamSet:
    """(q^2 a, b, q c)."""
    return replace(p, a=p.q * p.q * p.a, c=p.q * p.c)


def vecE_bqj_poly(p: ParamSet, n: int, var: str = "x") -> Vec2:
    k = abs(n)
    first = P_poly(p, k, var)
    if n == 0:
        return Vec2(first, Laurent({}, var))
    second = P_poly(bqj_shifted(p), k - 1, var).subs(p.q) * bqj_vec_coeff(p, n)
    return Vec2(first, second)


def eval_vector_E(p: ParamSet, n: int, point) -> Vec2:
    point = Q(point)
    k = abs(n)
    if p.family in X_FAMILIES:
        first = eval_family(p, k, point)
        if n == 0:
            return Vec2(first, Fraction(0))
        return Vec2(first, bqj_vec_coeff(p, n) * eval_family(bqj_shifted(p), k - 1, p.q * point))
    first = eval_family(p, k, point)
    if n == 0:
        return Vec2(first, Fraction(0))
    return Vec2(first, -sigma(p, n) / _nonsym_den(p) * eval_family(shifted_ab(p), k - 1, point))


# q-Bessel -------------------------------------------------------------------------


def eval_qbessel(gamma, z, a, b, q, tol: float = 1e-16):
    """J_gamma[z; a, b | q] = 2phi1(az, a/z; ab; q, -q gamma / a) in floating point."""
    if not abs(q) < 1:
        raise ValueError("|q| < 1 required")
    arg = -q * gamma / a
    if not abs(arg) < 1:
        raise ValueError("|q gamma / a| < 1 required")
    if z == 0:
        raise ValueError("z must be nonzero")
    val, _ = phi_infinite_float([a * z, a / z], [a * b], q, arg, tol)
    return val


# Spectral grids -------------------------------------------------------------------


def z_grid(a, q, n: int):
    """z_{a,q}(n) = a q^n (n >= 0), a^-1 q^n (n < 0)."""
    return a * q ** n if n >= 0 else q ** n / a


def spectral(kind: str, p, n: int, q=None):
    """Grid values z_grid / nu / mu / sigma.

    For ``nu`` and ``mu`` the parameters are those of the family whose
    recurrence is being formed (nu uses abcd, mu uses ab); no square roots
    are needed.
    """
    if isinstance(p, DualParams):
        if q is None:
            raise ValueError("q required with DualParams")
        p = p.as_params(q)
    q = p.q
    if kind in ("z", "z_grid"):
        return z_grid(p.a, q, n)
    if kind in ("nu", "nu_grid"):
        return q ** (1 - n) / p.abcd if n >= 0 else q ** (-n)
    if kind in ("mu", "mu_grid"):
        return 1 / (p.a * p.b * q ** (1 + n)) if n >= 0 else q ** (-n)
    if kind == "sigma":
        return sigma(p, n)
    raise ValueError(f"unknown spectral kind {kind!r}")


def mu_ab(p: ParamSet, n: int):
    """mu_{ab,q}(n) of the degenerate mixed duality."""
    q, ab = p.q, p.a * p.b
    if n >= 0:
        return ab * q ** (-n) * (1 - q ** n)
    k = -n
    return q ** (-k) * (1 - q ** k * ab)
