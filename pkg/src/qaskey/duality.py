"""Polynomial and operator dualities, checked by evaluating both sides separately."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Laurent, LinOp, Seq, VerificationReport, check_equal, combine, laurent_eval
from .families import (
    ParamSet, asc_to_lqj, cdqh_to_bqj, dual_paramset, eval_family, eval_nonsym_E, eval_qbessel,
    eval_vector_E, little_q_jacobi_float, make_params, mu_ab, R_laurent, spectral, z_grid,
)
from .operators import (
    GridCollision, op_daha, op_L, op_Lambda, op_M, op_N, op_dual_side, op_nonsym_recurrence,
)

POLY_CASES = ("AW", "CDqH-BqJ", "ASC-LqJ", "nonsym-AW", "mixed-2D", "degenerate-nonsym", "AWqB-LqJ")
OPERATOR_CASES = ("AW-L", "AW-Lambda", "CDqH-L", "BqJ-L", "ASC-L", "LqJ-L", "DAHA-Y", "DAHA-Z",
                  "DAHA-T1")


@dataclass(frozen=True)
class DualityCase:
    id: str
    params: ParamSet

    @property
    def dual(self) -> ParamSet:
        return dual_for(self.id, self.params)


def dual_for(case: str, p: ParamSet) -> ParamSet:
    """Dual parameters of a case; the CDqH/ASC cases use the rational direction."""
    if case in ("AW", "nonsym-AW", "mixed-2D", "AW-L", "AW-Lambda", "DAHA-Y", "DAHA-Z", "DAHA-T1"):
        return dual_paramset(p.as_family("AW"))
    if case in ("CDqH-BqJ", "degenerate-nonsym", "CDqH-L", "BqJ-L"):
        return cdqh_to_bqj(p.as_family("CDqH"))
    if case in ("ASC-LqJ", "AWqB-LqJ", "ASC-L", "LqJ-L"):
        return asc_to_lqj(p.as_family("ASC"))
    raise ValueError(f"unknown duality case {case!r}")


def _inv_grid(a, q, m):
    return 1 / z_grid(a, q, m)


def _pairs(m_range, n_range):
    return [(m, n) for m in m_range for n in n_range]


def check_poly_duality(case: str, p: ParamSet, m_max: int = 6, n_max: int | None = None,
                       form: str = "derived", **kw) -> VerificationReport:
    """Both sides of a polynomial duality at every (m, n) in range.

    ``form`` only matters for "degenerate-nonsym", where "printed" evaluates the
    vector side at q^-n for negative n as well.
    """
    n_max = m_max if n_max is None else n_max
    suite = f"poly-duality[{case}]"
    if case == "AWqB-LqJ":
        return _check_awqb_lqj(p, m_max, n_max, **kw)
    dp = dual_for(case, p)
    q = p.q
    reps = []
    two_sided = case in ("nonsym-AW", "mixed-2D", "degenerate-nonsym")
    rng_m = range(-m_max, m_max + 1) if two_sided else range(m_max + 1)
    rng_n = range(-n_max, n_max + 1) if two_sided else range(n_max + 1)
    for m, n in _pairs(rng_m, rng_n):
        if case == "AW":
            lhs = eval_family(p.as_family("AW"), n, 1 / (p.a * q ** m))
            rhs = eval_family(dp, m, 1 / (dp.a * q ** n))
        elif case == "CDqH-BqJ":
            lhs = eval_family(p.as_family("CDqH"), n, 1 / (p.a * q ** m))
            rhs = eval_family(dp, m, q ** (-n))
        elif case == "ASC-LqJ":
            lhs = eval_family(p.as_family("ASC"), n, 1 / (p.a * q ** m))
            rhs = eval_family(dp, m, q ** (-n), form="P")
        elif case == "nonsym-AW":
            lhs = eval_nonsym_E(p.as_family("AW"), n, _inv_grid(p.a, q, m))
            rhs = eval_nonsym_E(dp, m, _inv_grid(dp.a, q, n))
        elif case == "mixed-2D":
            lhs = eval_nonsym_E(p.as_family("AW"), n, _inv_grid(p.a, q, m))
            nu = spectral("nu", p, n)
            v = eval_vector_E(dp, m, _inv_grid(dp.a, q, n))
            rhs = v.x + (1 - p.abcd * nu / q) * (1 - p.a * p.b * nu) / nu * v.y
        elif case == "degenerate-nonsym":
            lhs = eval_nonsym_E(p.as_family("CDqH"), n, _inv_grid(p.a, q, m))
            # the printed point q^-n is right for n >= 0; for n < 0 the point is q^n
            x = q ** (-n) if form == "printed" else q ** (-abs(n))
            v = eval_vector_E(dp, m, x)
            rhs = v.x + mu_ab(p, n) * v.y
        else:
            raise ValueError(f"unknown duality case {case!r}")
        reps.append(check_equal(suite, f"m={m} n={n}", lhs, rhs, m=m, n=n))
    return combine(suite, f"{case} polynomial duality", reps)


def _check_awqb_lqj(p, m_max, n_max, gamma=0.1, tol=1e-10) -> VerificationReport:
    """J_{q^n gamma}[a^-1 q^-m; a, b] against p_m(-q^n gamma / a; ab/q, a/b) in floating point."""
    suite = "poly-duality[AWqB-LqJ]"
    q, a, b = float(p.q), float(p.a), float(p.b)
    reps = []
    for m, n in _pairs(range(m_max + 1), range(n_max + 1)):
        g = q ** n * gamma
        lhs = eval_qbessel(g, 1 / (a * q ** m), a, b, q)
        rhs = little_q_jacobi_float(m, -g / a, a * b / q, a / b, q)
        err = abs(lhs - rhs) / max(1.0, abs(rhs))
        ok = err <= tol and math.isfinite(lhs)
        reps.append(VerificationReport(suite, f"m={m} n={n}", ok, 1,
                                       None if ok else {"lhs": lhs, "rhs": rhs, "err": err}))
    return combine(suite, "AWqB-LqJ duality (numeric)", reps)


def check_c0_consistency(p: ParamSet, m_max: int = 5) -> VerificationReport:
    """The CDqH/BqJ duality at c = 0 reproduces the ASC/LqJ duality values."""
    suite = "poly-duality[c0-consistency]"
    q = p.q
    pc = make_params("CDqH", q, p.a, p.b, 0, validate=False)
    pa = make_params("ASC", q, p.a, p.b, validate=False)
    dc, da = cdqh_to_bqj(pc), asc_to_lqj(pa)
    reps = []
    for m, n in _pairs(range(m_max + 1), range(m_max + 1)):
        pt = 1 / (p.a * q ** m)
        reps.append(check_equal(suite, f"left m={m} n={n}", eval_family(pc, n, pt), eval_family(pa, n, pt)))
        reps.append(check_equal(suite, f"right m={m} n={n}", eval_family(dc, m, q ** (-n)),
                                eval_family(da, m, q ** (-n), form="P")))
    return combine(suite, "c -> 0 of the CDqH/BqJ duality", reps)


# ---------------------------------------------------------------------------
# operator dualities


def _test_functions(kind: str, max_deg: int):
    if kind == "symmetric":
        return [("1", Laurent.const(1, "z"))] + [
            (f"z^{k}+z^-{k}", Laurent({k: 1, -k: 1}, "z")) for k in range(1, max_deg + 1)]
    if kind == "laurent":
        return [(f"z^{k}", Laurent({k: 1}, "z")) for k in range(-max_deg, max_deg + 1)]
    if kind == "poly":
        return [(f"x^{k}", Laurent({k: 1}, "x")) for k in range(max_deg + 1)]
    raise ValueError(kind)


def _restriction_report(suite, relation, A: LinOp, point, rhs_op: LinOp, scale, funcs, m_range):
    reps = []
    for label, f in funcs:
        Af = A(f)
        g = Seq(lambda m, f=f: laurent_eval(f, point(m)))
        rg = rhs_op(g)
        for m in m_range:
            reps.append(check_equal(suite, f"{relation} f={label} m={m}",
                                    laurent_eval(Af, point(m)), scale * rg(m), f=label, m=m))
    return combine(suite, relation, reps)


def _plus_minus(p):
    z = Laurent({1: 1, -1: 1}, "z")
    return LinOp(lambda f: f * z, "Z+Zinv", "symmetric")


def _grid_points(a, q, m_range):
    pts = [z_grid(a, q, m) for m in m_range]
    if len(set(pts)) != len(pts):
        raise GridCollision("spectral grid points are not pairwise distinct")


def check_operator_duality(case: str, p: ParamSet, max_deg: int = 6, m_max: int = 6,
                           funcs=None, form: str = "derived") -> VerificationReport:
    """Restriction of an operator to the spectral grid against the dual-side operator.

    For CDqH-L and ASC-L, ``form="printed"`` pairs the operator with the
    recurrence for the square-root parameters and the extra factor a~, instead
    of the rational partner parameters with factor 1.
    """
    suite = f"operator-duality[{case}]"
    q = p.q
    one_sided = range(m_max + 1)
    two_sided = range(-m_max, m_max + 1)
    if case in ("AW-L", "AW-Lambda"):
        pa = p.as_family("AW")
        dp = dual_for(case, p)
        point = lambda m: 1 / (pa.a * q ** m)  # noqa: E731
        funcs = funcs or _test_functions("symmetric", max_deg)
        if case == "AW-L":
            return _restriction_report(suite, "L restricted = a~ M~", op_L(pa, "AW"), point,
                                       op_M(dp, "AW"), dp.a, funcs, one_sided)
        return _restriction_report(suite, "(Z+Z^-1) restricted = a^-1 Lambda~", _plus_minus(pa), point,
                                   op_Lambda(dp, "AW"), 1 / pa.a, funcs, one_sided)
    if case in ("CDqH-L", "ASC-L"):
        fam, partner = ("CDqH", "BqJ") if case == "CDqH-L" else ("ASC", "LqJ")
        if form == "derived":
            lp = p.as_family(fam)
            dp, scale = dual_for(case, p), 1
        elif form == "printed":
            # the partner of lp is the rational triple p itself, with the factor p.a
            dp = make_params(partner, q, p.a, p.b, p.c if partner == "BqJ" else 0, validate=False)
            lp = cdqh_to_bqj(p.as_family("CDqH")) if fam == "CDqH" else asc_to_lqj(p.as_family("ASC"))
            lp = make_params(fam, q, lp.a, lp.b, lp.c if fam == "CDqH" else 0, validate=False)
            scale = p.a
        else:
            raise ValueError(form)
        point = lambda m: 1 / (lp.a * q ** m)  # noqa: E731
        funcs = funcs or _test_functions("symmetric", max_deg)
        return _restriction_report(suite, f"L[{fam}] restricted = M[{partner}] ({form})", op_L(lp, fam),
                                   point, op_M(dp, partner), scale, funcs, one_sided)
    if case in ("BqJ-L", "LqJ-L"):
        fam, partner = ("BqJ", "CDqH") if case == "BqJ-L" else ("LqJ", "ASC")
        # rational direction: p is the CDqH/ASC side, the BqJ/LqJ side is its image
        lp = dual_for("CDqH-BqJ" if fam == "BqJ" else "ASC-LqJ", p)
        dp = p.as_family(partner)
        point = lambda m: q ** (-m)  # noqa: E731
        funcs = funcs or _test_functions("poly", max_deg)
        return _restriction_report(suite, f"L[{fam}] restricted = a~ M[{partner}]", op_L(lp, fam),
                                   point, op_M(dp, partner), dp.a, funcs, one_sided)
    if case in ("DAHA-Y", "DAHA-Z", "DAHA-T1"):
        pa = p.as_family("AW")
        dp = dual_for(case, p)
        _grid_points(pa.a, q, two_sided)
        point = lambda m: _inv_grid(pa.a, q, m)  # noqa: E731
        funcs = funcs or _test_functions("laurent", max_deg)
        if case == "DAHA-Y":
            return _restriction_report(suite, "Y restricted = a~ M~", op_daha("Y", pa), point,
                                       op_nonsym_recurrence(dp, "AW"), dp.a, funcs, two_sided)
        if case == "DAHA-Z":
            return _restriction_report(suite, "Zinv restricted = a^-1 N~", op_daha("Zinv", pa), point,
                                       op_N(dp), 1 / pa.a, funcs, two_sided)
        return _restriction_report(suite, "T1 restricted = T_script~", op_daha("T1", pa), point,
                                   op_dual_side("T_script", dp), 1, funcs, two_sided)
    raise ValueError(f"unknown operator duality case {case!r}")


def check_hat_functoriality(p: ParamSet, max_deg: int = 4, m_max: int = 5) -> VerificationReport:
    """(AB) restricted = A-check B-check for A, B in {L, Z+Z^-1} at AW parameters."""
    pa = p.as_family("AW")
    dp = dual_paramset(pa)
    q = pa.q
    ops = {"L": (op_L(pa, "AW"), op_M(dp, "AW") * dp.a),
           "W": (_plus_minus(pa), op_Lambda(dp, "AW") * (1 / pa.a))}
    point = lambda m: 1 / (pa.a * q ** m)  # noqa: E731
    reps = []
    for x in ops:
        for y in ops:
            A = ops[x][0] @ ops[y][0]
            hat = ops[x][1] @ ops[y][1]
            reps.append(_restriction_report("check-hat", f"({x}{y}) = {x}^ {y}^", A, point, hat, 1,
                                            _test_functions("symmetric", max_deg), range(m_max + 1)))
    return combine("check-hat", "functoriality of restriction", reps)


def eigen_example_18(p: ParamSet, n: int, m_max: int = 5) -> VerificationReport:
    """Both sides of the AW operator duality on R_n equal the eigenvalue times R_n on the grid."""
    pa = p.as_family("AW")
    q = pa.q
    lam = q ** (-n) + pa.abcd * q ** (n - 1)
    rep = check_operator_duality("AW-L", pa, funcs=[(f"R_{n}", R_laurent(pa, n))], m_max=m_max)
    Rn = R_laurent(pa, n)
    Lr = op_L(pa, "AW")(Rn)
    extra = [check_equal("operator-duality[AW-L]", f"L R_{n} = lambda R_{n} m={m}",
                         laurent_eval(Lr, 1 / (pa.a * q ** m)), lam * laurent_eval(Rn, 1 / (pa.a * q ** m)))
             for m in range(m_max + 1)]
    return combine("operator-duality[AW-L]", f"eigen example n={n}", [rep] + extra)


def run_all(params_aw: ParamSet, triple: ParamSet, pair: ParamSet, square_aw: ParamSet | None = None,
            m_max: int = 6, max_deg: int = 6) -> VerificationReport:
    reps = [
        check_poly_duality("AW", params_aw, m_max),
        check_poly_duality("CDqH-BqJ", triple, m_max),
        check_poly_duality("ASC-LqJ", pair, m_max),
        check_poly_duality("nonsym-AW", params_aw, 5),
        check_poly_duality("mixed-2D", params_aw, 5),
        check_poly_duality("degenerate-nonsym", triple, 5),
        check_poly_duality("AWqB-LqJ", pair, 5),
        check_c0_consistency(pair),
        check_hat_functoriality(params_aw),
    ]
    for case in OPERATOR_CASES:
        src = triple if case in ("CDqH-L", "BqJ-L") else pair if case in ("ASC-L", "LqJ-L") else params_aw
        if case == "DAHA-Y" and square_aw is not None:
            # the dual recurrence has a 0/0 coefficient when abcd = q (as for P1)
            continue
        reps.append(check_operator_duality(case, src, max_deg, m_max))
    if square_aw is not None:
        for case in ("DAHA-Y", "DAHA-Z", "DAHA-T1", "AW-L", "AW-Lambda"):
            reps.append(check_operator_duality(case, square_aw, max_deg, 4))
    return combine("duality", "all dualities", reps)
