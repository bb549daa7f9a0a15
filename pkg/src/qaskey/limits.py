"""Limit transitions certified by exact decay rates along decreasing rational lambdas.

Each transition maps lambda to a tuple of exact values; the deviation from the
target tuple must shrink like lambda^order.  A deviation that is identically 0
also passes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .core import Laurent, QaskeyError, VerificationReport, combine, laurent_eval
from .families import (
    ParamSet, eval_family, eval_nonsym_E, eval_qbessel, eval_vector_E, little_q_jacobi, make_params,
)
from .operators import M_coefficients, _matrix_Z, _Y11, _Y12, _Y21, _Y22, op_L
from .qseries import qpoch

DEFAULT_LAMBDAS = (Fraction(1, 10 ** 3), Fraction(1, 10 ** 4), Fraction(1, 10 ** 5))
DEFAULT_NS = (15, 20, 25)


class InvalidSubstitutedParams(QaskeyError):
    pass


@dataclass(frozen=True)
class LimitTransition:
    id: str
    source: str
    target: str
    order: int
    kind: str  # "poly", "operator", "constants", "matrix", "eigenvalue"
    description: str


TRANSITIONS = {t.id: t for t in [
    LimitTransition("AW-CDqH", "AW", "CDqH", 1, "poly", "R_n[z; a, b, c, d=lam] -> R_n[z; a, b, c]"),
    LimitTransition("AW-BqJ", "AW", "BqJ", 2, "poly",
                    "R_n[x/lam; lam, qa/lam, qc/lam, b lam/c] -> P_n(x; a, b, c)"),
    LimitTransition("CDqH-ASC", "CDqH", "ASC", 1, "poly", "R_n[z; a, b, c=lam] -> R_n[z; a, b]"),
    LimitTransition("BqJ-LqJ-c0", "BqJ", "LqJ", 1, "poly", "P_n(x; a, b, c=lam) -> P_n(x; a, b)"),
    LimitTransition("BqJ-LqJ-cinf", "BqJ", "LqJ", 1, "poly", "P_n(qx/lam; a, b, 1/lam) -> p_n(x; a, b)"),
    LimitTransition("nonsymAW-nonsymCDqH", "AW", "CDqH", 1, "poly", "E_n[z; a, b, c, d=lam] -> E_n[z; a, b, c]"),
    LimitTransition("vecAW-vecBqJ", "AW", "BqJ", 2, "poly", "vecE_n[x/lam; substituted] -> vecE_n(x; a, b, c)"),
    LimitTransition("L:AW-CDqH", "AW", "CDqH", 1, "operator", "L with d=lam -> CDqH L"),
    LimitTransition("M:AW-CDqH", "AW", "CDqH", 1, "operator", "M coefficients with d=lam"),
    LimitTransition("L:AW-BqJ", "AW", "BqJ", 2, "operator", "substituted L on P(lam (z+1/z)) at z=x/lam"),
    LimitTransition("M:AW-BqJ", "AW", "BqJ", 2, "operator", "lam times the substituted M coefficients"),
    LimitTransition("L:CDqH-ASC", "CDqH", "ASC", 1, "operator", "L with c=lam"),
    LimitTransition("M:CDqH-ASC", "CDqH", "ASC", 1, "operator", "M coefficients with c=lam"),
    LimitTransition("L:BqJ-LqJ", "BqJ", "LqJ", 1, "operator", "L with c=lam"),
    LimitTransition("M:BqJ-LqJ", "BqJ", "LqJ", 1, "operator", "M coefficients with c=lam"),
    LimitTransition("SC:AW-CDqH", "AW", "CDqH", 1, "constants", "structure constants with d=lam"),
    LimitTransition("SC:AW-BqJ", "AW", "BqJ", 2, "constants",
                    "(lam B, lam^2 C0, C1, lam^2 D0, lam D1, lam^2 Q0) substituted"),
    LimitTransition("SC:CDqH-ASC", "CDqH", "ASC", 1, "constants", "structure constants with c=lam"),
    LimitTransition("SC:BqJ-LqJ", "BqJ", "LqJ", 1, "constants", "structure constants with c=lam"),
    LimitTransition("Z:AW-BqJ", "AW", "BqJ", 2, "matrix", "lam Z_sub at z=x/lam -> X"),
    LimitTransition("Zinv:AW-BqJ", "AW", "BqJ", 2, "matrix", "lam Zinv_sub at z=x/lam -> X'"),
    LimitTransition("Y:AW-BqJ", "AW", "BqJ", 2, "matrix", "substituted matrix Y entries -> BqJ Y entries"),
    LimitTransition("eig:AW-CDqH", "AW", "CDqH", 1, "eigenvalue", "q^-n + abcd q^(n-1) with d=lam"),
    LimitTransition("eig:AW-BqJ", "AW", "BqJ", 2, "eigenvalue", "substituted AW eigenvalue"),
]}

SUBSTITUTION_LIMITS = tuple(TRANSITIONS)


def substituted(p: ParamSet, lam) -> ParamSet:
    """AW parameters (lam, qa/lam, qc/lam, b lam/c) from a BqJ triple."""
    q, a, b, c = p.q, p.a, p.b, p.c
    if c == 0:
        raise InvalidSubstitutedParams("the big q-Jacobi substitution needs c != 0")
    return make_params("AW", q, lam, q * a / lam, q * c / lam, b * lam / c, validate=False)


def _with_lam(p: ParamSet, family: str, **kw) -> ParamSet:
    return make_params(family, p.q, kw.get("a", p.a), kw.get("b", p.b), kw.get("c", p.c),
                       kw.get("d", p.d), validate=False)


def _lift(P: Laurent, lam) -> Laurent:
    """P(lam (z + 1/z)) as an exact Laurent polynomial in z."""
    w = Laurent({1: lam, -1: lam}, "z")
    out = Laurent({}, "z")
    for k, v in P.c.items():
        out = out + w ** k * v
    return out


def _mono(n, var):
    return Laurent({n: 1}, var) if var == "x" else Laurent({n: 1, -n: 1}, var)


def _sc_tuple(sc):
    return (sc.B, sc.C0, sc.C1, sc.D0, sc.D1, sc.Q0)


def _value_fns(tid: str, p: ParamSet, n: int, point) -> tuple[Callable, tuple]:
    """(lam -> tuple of values, target tuple) for a transition."""
    from .algebra import structure_constants
    from .limitops import bqj_Y_entry
    q = p.q
    if tid == "AW-CDqH":
        return (lambda lam: (eval_family(_with_lam(p, "AW", d=lam), n, point),),
                (eval_family(_with_lam(p, "CDqH", d=0), n, point),))
    if tid == "AW-BqJ":
        return (lambda lam: (eval_family(substituted(p, lam), n, point / lam),),
                (eval_family(_with_lam(p, "BqJ"), n, point),))
    if tid == "CDqH-ASC":
        return (lambda lam: (eval_family(_with_lam(p, "CDqH", c=lam, d=0), n, point),),
                (eval_family(_with_lam(p, "ASC", c=0, d=0), n, point),))
    if tid == "BqJ-LqJ-c0":
        return (lambda lam: (eval_family(_with_lam(p, "BqJ", c=lam), n, point),),
                (eval_family(_with_lam(p, "LqJ", c=0), n, point, form="P"),))
    if tid == "BqJ-LqJ-cinf":
        return (lambda lam: (eval_family(_with_lam(p, "BqJ", c=1 / lam), n, q * point / lam),),
                (little_q_jacobi(n, point, p.a, p.b, q),))
    if tid == "nonsymAW-nonsymCDqH":
        return (lambda lam: (eval_nonsym_E(_with_lam(p, "AW", d=lam), n, point),),
                (eval_nonsym_E(_with_lam(p, "CDqH", d=0), n, point),))
    if tid == "vecAW-vecBqJ":
        def vec(lam):
            v = eval_vector_E(substituted(p, lam), n, point / lam)
            return (v.x, v.y)
        t = eval_vector_E(_with_lam(p, "BqJ"), n, point)
        return vec, (t.x, t.y)
    if tid in ("L:AW-CDqH", "L:CDqH-ASC", "L:BqJ-LqJ"):
        src, tgt, key = {"L:AW-CDqH": ("AW", "CDqH", "d"), "L:CDqH-ASC": ("CDqH", "ASC", "c"),
                         "L:BqJ-LqJ": ("BqJ", "LqJ", "c")}[tid]
        var = "x" if src == "BqJ" else "z"
        f = _mono(n, var)
        tp = _with_lam(p, tgt, **{key: 0})
        return (lambda lam: (laurent_eval(op_L(_with_lam(p, src, **{key: lam}), src)(f), point),),
                (laurent_eval(op_L(tp, tgt)(f), point),))
    if tid == "L:AW-BqJ":
        f = Laurent({n: 1}, "x")
        return (lambda lam: (laurent_eval(op_L(substituted(p, lam), "AW")(_lift(f, lam)), point / lam),),
                (laurent_eval(op_L(_with_lam(p, "BqJ"), "BqJ")(f), point),))
    if tid in ("M:AW-CDqH", "M:CDqH-ASC", "M:BqJ-LqJ"):
        src, tgt, key = {"M:AW-CDqH": ("AW", "CDqH", "d"), "M:CDqH-ASC": ("CDqH", "ASC", "c"),
                         "M:BqJ-LqJ": ("BqJ", "LqJ", "c")}[tid]
        return (lambda lam: M_coefficients(_with_lam(p, src, **{key: lam}), n, src),
                M_coefficients(_with_lam(p, tgt, **{key: 0}), n, tgt))
    if tid == "M:AW-BqJ":
        return (lambda lam: tuple(lam * v for v in M_coefficients(substituted(p, lam), n, "AW")),
                M_coefficients(_with_lam(p, "BqJ"), n, "BqJ"))
    if tid in ("SC:AW-CDqH", "SC:CDqH-ASC", "SC:BqJ-LqJ"):
        src, tgt, key = {"SC:AW-CDqH": ("AW", "CDqH", "d"), "SC:CDqH-ASC": ("CDqH", "ASC", "c"),
                         "SC:BqJ-LqJ": ("BqJ", "LqJ", "c")}[tid]
        return (lambda lam: _sc_tuple(structure_constants(src, _with_lam(p, src, **{key: lam}))),
                _sc_tuple(structure_constants(tgt, _with_lam(p, tgt, **{key: 0}))))
    if tid == "SC:AW-BqJ":
        def sc(lam):
            s = structure_constants("AW", substituted(p, lam))
            return (lam * s.B, lam * lam * s.C0, s.C1, lam * lam * s.D0, lam * s.D1, lam * lam * s.Q0)
        return sc, _sc_tuple(structure_constants("BqJ", _with_lam(p, "BqJ")))
    if tid in ("Z:AW-BqJ", "Zinv:AW-BqJ"):
        from .limitops import bqj_matrix
        inv = tid.startswith("Zinv")
        tgt = bqj_matrix("Xp" if inv else "X", p)

        def mat(lam):
            M = _matrix_Z(substituted(p, lam), inverse=inv)
            return tuple(lam * laurent_eval(e, point / lam) for e in (M.a, M.b, M.c, M.d))
        return mat, tuple(laurent_eval(e, point) for e in tgt)
    if tid == "Y:AW-BqJ":
        f = Laurent({n: 1}, "x")
        bp = _with_lam(p, "BqJ")

        def ent(lam):
            sp = substituted(p, lam)
            g = _lift(f, lam)
            return tuple(laurent_eval(op(sp)(g), point / lam) for op in (_Y11, _Y12, _Y21, _Y22))
        return ent, tuple(laurent_eval(bqj_Y_entry(bp, e)(f), point) for e in ("11", "12", "21", "22"))
    if tid == "eig:AW-CDqH":
        return (lambda lam: (q ** (-n) + _with_lam(p, "AW", d=lam).abcd * q ** (n - 1),), (q ** (-n),))
    if tid == "eig:AW-BqJ":
        return (lambda lam: (q ** (-n) + substituted(p, lam).abcd * q ** (n - 1),),
                (q ** (-n) + q ** (n + 1) * p.a * p.b,))
    raise ValueError(f"unknown transition {tid!r}")


def deviations(tid: str, p: ParamSet, n: int, point, lambdas=DEFAULT_LAMBDAS) -> list[Fraction]:
    fn, target = _value_fns(tid, p, n, point)
    out = []
    for lam in lambdas:
        vals = fn(Fraction(lam))
        out.append(max(abs(Fraction(v) - Fraction(t)) for v, t in zip(vals, target)))
    return out


def decay_verdict(devs, lambdas, order: int, factor=2) -> tuple[bool, list]:
    """Pass iff every ratio of consecutive deviations is within ``factor`` of (lam'/lam)^order."""
    if all(d == 0 for d in devs):
        return True, []
    ratios = []
    ok = True
    for k in range(len(devs) - 1):
        if devs[k] == 0:
            return False, ratios
        r = devs[k + 1] / devs[k]
        e = (Fraction(lambdas[k + 1]) / Fraction(lambdas[k])) ** order
        ratios.append(r)
        if not (e / factor <= r <= e * factor):
            ok = False
    return ok, ratios


def check_limit(tid: str, p: ParamSet, n: int, point, lambdas=DEFAULT_LAMBDAS,
                order: int | None = None) -> VerificationReport:
    """Exact deviations along ``lambdas`` and the decay-rate verdict."""
    lambdas = list(lambdas)
    if any(not (lambdas[i] > lambdas[i + 1] > 0) for i in range(len(lambdas) - 1)):
        raise ValueError("lambdas must be strictly decreasing and positive")
    t = TRANSITIONS[tid]
    order = t.order if order is None else order
    devs = deviations(tid, p, n, point, lambdas)
    ok, ratios = decay_verdict(devs, lambdas, order)
    witness = {"order": order, "deviations": [f"{float(d):.6e}" for d in devs],
               "ratios": [f"{float(r):.6e}" for r in ratios]}
    return VerificationReport("limits", f"{tid} n={n}", ok, len(devs), witness)


def check_qbessel_limit(p: ParamSet, n: int, z, gamma, Ns=DEFAULT_NS, tol=1e-10) -> VerificationReport:
    """R_{N-n}[z; a, b, -q^-N / gamma] approaches J_{q^n gamma}[z; a, b] as N grows."""
    q, a, b = p.q, p.a, p.b
    target = eval_qbessel(float(q ** n * gamma), float(z), float(a), float(b), float(q))
    devs = []
    for N in Ns:
        pc = make_params("CDqH", q, a, b, -q ** (-N) / gamma, validate=False)
        devs.append(abs(float(eval_family(pc, N - n, z)) - target))
    ok = all(math.isfinite(d) for d in devs) and devs[-1] <= tol * max(1.0, abs(target))
    ok = ok and all(devs[i + 1] <= devs[i] or devs[i + 1] <= tol for i in range(len(devs) - 1))
    return VerificationReport("limits", f"CDqH-AWqB n={n}", ok, len(devs),
                              {"N": list(Ns), "deviations": [f"{d:.3e}" for d in devs], "target": target})


def lqj_prefactor(n: int, a, b, q) -> Fraction:
    """(-qb)^-n q^(-n(n-1)/2) (qb; q)_n / (qa; q)_n."""
    return (-q * b) ** (-n) * q ** Fraction(-n * (n - 1), 2) * qpoch(q * b, q, n) / qpoch(q * a, q, n)


def check_lqj_routes(p: ParamSet, n_max: int = 4, points=(Fraction(2, 7), Fraction(3))) -> VerificationReport:
    """p_n(x; a, b) = prefactor * P_n(qbx; b, a), exactly."""
    from .core import check_equal
    q, a, b = p.q, p.a, p.b
    pb = make_params("LqJ", q, b, a, validate=False)
    reps = []
    for n in range(n_max + 1):
        for x in points:
            lhs = little_q_jacobi(n, x, a, b, q)
            rhs = lqj_prefactor(n, a, b, q) * eval_family(pb, n, q * b * x, form="P")
            reps.append(check_equal("limits", f"LqJ routes n={n} x={x}", lhs, rhs))
    return combine("limits", "two little q-Jacobi routes", reps)


def check_printed_Ztilde(p: ParamSet, lambdas=DEFAULT_LAMBDAS, point=Fraction(3)) -> VerificationReport:
    """The displayed entries of the rescaled Z equal lam Z_sub at z = x/lam exactly."""
    from .core import check_equal
    q, a = p.q, p.a
    x = point
    reps = []
    for lam in lambdas:
        M = _matrix_Z(substituted(p, lam))
        got = [lam * laurent_eval(e, x / lam) for e in (M.a, M.b, M.c, M.d)]
        den = 1 - q * a
        printed = [(x * x + lam * lam - x * (lam * lam + q * a)) / (den * x),
                   (x - lam * lam) * (q * a * x - lam * lam) * (x - 1) * (x - q * a) / (den * x * x),
                   -1 / den,
                   (lam * lam * x - q * a * (lam * lam + x * x - x)) / (den * x)]
        reps.append(check_equal("limits", f"rescaled Z entries lam={lam}", tuple(got), tuple(printed)))
    return combine("limits", "rescaled Z entries", reps)


# the error of the q-Bessel limit decays like q^N, so q = 1/4 is needed to
# reach 1e-10 by N = 25
QBESSEL_PARAMS = make_params("ASC", Fraction(1, 4), Fraction(1, 3), Fraction(1, 5))

# z = 3 = 1/a for the P2 parameters, where every R_n equals 1
DEFAULT_POINTS = {"z": Fraction(2), "x": Fraction(2, 7)}


def default_case(tid: str):
    """(params, point) used by the suite for a transition."""
    from .families import P2, P2_TRIPLE
    t = TRANSITIONS[tid]
    if t.source == "AW" and t.target == "CDqH":
        return P2, DEFAULT_POINTS["z"]
    if t.source == "CDqH":
        return P2_TRIPLE, DEFAULT_POINTS["z"]
    # BqJ triple, used both as the substituted AW source and as the BqJ source
    return P2_TRIPLE.as_family("BqJ"), (Fraction(3) if t.kind in ("matrix",) else DEFAULT_POINTS["x"])


def run_all(n_max: int = 4, lambdas=DEFAULT_LAMBDAS) -> VerificationReport:
    from .families import P2_PAIR, P2_TRIPLE
    reps = []
    for tid, t in TRANSITIONS.items():
        p, point = default_case(tid)
        ns = range(-n_max, n_max + 1) if tid in ("nonsymAW-nonsymCDqH", "vecAW-vecBqJ") else range(n_max + 1)
        for n in ns:
            reps.append(check_limit(tid, p, n, point, lambdas))
    for n in range(-2, n_max + 1):
        reps.append(check_qbessel_limit(QBESSEL_PARAMS, n, Fraction(3, 2), Fraction(1, 20)))
    reps.append(check_lqj_routes(P2_PAIR))
    reps.append(check_printed_Ztilde(P2_TRIPLE))
    return combine("limits", "limit transitions", reps)
