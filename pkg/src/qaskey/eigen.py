"""Eigenvalue and recurrence suites for the five families and the non-symmetric polynomials."""
from __future__ import annotations

from fractions import Fraction

from .core import Laurent, Seq, Vec2, VerificationReport, check_equal, combine, laurent_eval, op_equal_on_basis
from .families import (P2, P2_PAIR, P2_TRIPLE, E_laurent, X_FAMILIES, eigenvalue, eval_nonsym_E,
                       eval_vector_E, family_poly, make_params, vecE_laurent)
from .operators import matrix_Z, op_daha, op_daha_degenerate, op_L, op_M, op_matrix, op_nonsym_recurrence

SCALAR_FAMILIES = ("AW", "CDqH", "ASC", "BqJ", "LqJ")
# z = 3 is 1/a at P2, where every R_n equals 1 and the recurrence reduces to a
# row sum of M, so z = 2 is always checked as well
DEFAULT_POINTS = {"z": (Fraction(3), Fraction(2)), "x": (Fraction(2, 7),)}


def default_params(family: str):
    """P2 restricted to the family; BqJ takes the P2 triple and LqJ the P2 pair."""
    src = {"AW": P2, "CDqH": P2_TRIPLE, "BqJ": P2_TRIPLE, "ASC": P2_PAIR, "LqJ": P2_PAIR}[family]
    return make_params(family, src.q, src.a, src.b, src.c, src.d)


def check_eigen(p, n_max: int = 8) -> VerificationReport:
    """L(R_n) = lambda_n R_n as exact polynomial identities."""
    suite = f"eigen[{p.family}]"
    L = op_L(p)
    reps = []
    for n in range(n_max + 1):
        R = family_poly(p, n)
        reps.append(check_equal(suite, f"L R_{n} = lambda_{n} R_{n}", L(R), R * eigenvalue(p, n), n=n))
    return combine(suite, "L R_n = lambda_n R_n", reps)


def check_recurrence(p, n_max: int = 8, point=None) -> VerificationReport:
    """M(R_n[z]) = (z + 1/z) R_n[z], or M(P_n(x)) = x P_n(x), at fixed points."""
    suite = f"recurrence[{p.family}]"
    xfam = p.family in X_FAMILIES
    pts = (Fraction(point),) if point is not None else DEFAULT_POINTS["x" if xfam else "z"]
    polys = {n: family_poly(p, n) for n in range(n_max + 2)}
    reps = []
    for pt in pts:
        g = Seq(lambda n, pt=pt: laurent_eval(polys[n], pt), (0, n_max + 1))
        mult = pt if xfam else pt + 1 / pt
        Mg = op_M(p)(g)
        reps += [check_equal(suite, f"M g({n}) = {'x' if xfam else 'z+1/z'} g({n})", Mg(n), mult * g(n), n=n,
                             point=pt) for n in range(n_max + 1)]
    return combine(suite, f"three-term recurrence at {', '.join(map(str, pts))}", reps)


def nonsym_eigenvalue(p, n: int) -> Fraction:
    return p.q ** (n - 1) * p.abcd if n >= 0 else p.q ** (-abs(n))


def check_nonsym_eigen(p, n_max: int = 6) -> VerificationReport:
    """Y E_n for the scalar AW operator and for the 2x2 matrix Y on vecE_n."""
    Y = op_daha("Y", p)
    Ym = op_matrix("Y", p)
    reps = []
    for n in range(-n_max, n_max + 1):
        lam = nonsym_eigenvalue(p, n)
        E = E_laurent(p, n)
        reps.append(check_equal("nonsym[AW]", f"Y E_{n} = ev E_{n}", Y(E), E * lam, n=n))
        v = vecE_laurent(p, n)
        reps.append(check_equal("nonsym[AW-matrix]", f"Y vecE_{n} = ev vecE_{n}", Ym(v), v * lam, n=n))
    return combine("nonsym", "Y eigenvalues (scalar and matrix)", reps)


def check_cdqh_eigen(p, n_max: int = 6) -> VerificationReport:
    """Y and Y' on the CDqH non-symmetric polynomials."""
    Y = op_daha_degenerate("CDqH", "Y", p)
    Yp = op_daha_degenerate("CDqH", "Yp", p)
    pd = p.with_(d=Fraction(0)) if p.d else p
    reps = []
    for n in range(-n_max, n_max + 1):
        E = E_laurent(pd, n)
        zero = E * 0
        ev_y = zero if n >= 0 else E * p.q ** n
        ev_yp = E * (p.q ** (-n) / (p.a * p.b)) if n >= 0 else zero
        reps.append(check_equal("nonsym[CDqH]", f"Y E_{n}", Y(E), ev_y, n=n))
        reps.append(check_equal("nonsym[CDqH]", f"Y' E_{n}", Yp(E), ev_yp, n=n))
    return combine("nonsym[CDqH]", "Y and Y' eigenvalues", reps)


def check_bqj_vector_eigen(p, n_max: int = 6) -> VerificationReport:
    """Matrix Y on the BqJ (or LqJ, c = 0) vector family."""
    fam = p.family
    Y = op_daha_degenerate(fam, "Y", p)
    reps = []
    for n in range(-n_max, n_max + 1):
        v = vecE_laurent(p, n)
        lam = p.q ** (n + 1) * p.a * p.b if n >= 0 else p.q ** n
        reps.append(check_equal(f"nonsym[{fam}-matrix]", f"Y vecE_{n} = ev vecE_{n}", Y(v), v * lam, n=n))
    return combine(f"nonsym[{fam}-matrix]", "Y eigenvalues", reps)


def _mat_at(M, point):
    return tuple(e(point) if isinstance(e, Laurent) else e for e in M)


def check_nonsym_recurrence(p, n_max: int = 5, point=None) -> VerificationReport:
    """M_n(E_n[z]) = z^-1 E_n[z], and the vector form M_n(vecE_n) = Z^-1 vecE_n.

    Without a point it runs at z = 3 and at z = 2/7 (z = 3 is 1/a at P2).
    """
    if point is None:
        return combine("nonsym-recurrence", "AW four-point recurrence",
                       [check_nonsym_recurrence(p, n_max, pt) for pt in (Fraction(3), Fraction(2, 7))])
    point = Fraction(point)
    M = op_nonsym_recurrence(p, "AW")
    lo, hi = -n_max - 2, n_max + 2
    g = Seq(lambda n: eval_nonsym_E(p, n, point), (lo, hi))
    Mg = M(g)
    reps = [check_equal("nonsym-recurrence[AW]", f"M E_{n}[z] = z^-1 E_{n}[z]", Mg(n), g(n) / point, n=n,
                        z=point) for n in range(-n_max, n_max + 1)]
    Zi = matrix_Z(p, inverse=True)
    zi = tuple(e(point) for e in (Zi.a, Zi.b, Zi.c, Zi.d))
    vx = Seq(lambda n: eval_vector_E(p, n, point).x, (lo, hi))
    vy = Seq(lambda n: eval_vector_E(p, n, point).y, (lo, hi))
    Mx, My = M(vx), M(vy)
    for n in range(-n_max, n_max + 1):
        rhs = Vec2(zi[0] * vx(n) + zi[1] * vy(n), zi[2] * vx(n) + zi[3] * vy(n))
        reps.append(check_equal("nonsym-recurrence[AW-vector]", f"M vecE_{n} = Z^-1 vecE_{n}",
                                Vec2(Mx(n), My(n)), rhs, n=n, z=point))
    return combine("nonsym-recurrence", f"AW four-point recurrence at z={point}", reps)


def check_bqj_recurrence(p, n_max: int = 5, point=Fraction(2, 7)) -> VerificationReport:
    """M~_n(vecE_n(x)) = X' vecE_n(x) for the BqJ vector family."""
    from .limitops import bqj_matrix
    point = Fraction(point)
    M = op_nonsym_recurrence(p, "BqJ")
    lo, hi = -n_max - 2, n_max + 2
    vx = Seq(lambda n: eval_vector_E(p, n, point).x, (lo, hi))
    vy = Seq(lambda n: eval_vector_E(p, n, point).y, (lo, hi))
    Mx, My = M(vx), M(vy)
    X = _mat_at(bqj_matrix("Xp", p), point)
    reps = []
    for n in range(-n_max, n_max + 1):
        rhs = Vec2(X[0] * vx(n) + X[1] * vy(n), X[2] * vx(n) + X[3] * vy(n))
        reps.append(check_equal(f"nonsym-recurrence[{p.family}]", f"M~ vecE_{n} = X' vecE_{n}",
                                Vec2(Mx(n), My(n)), rhs, n=n, x=point))
    return combine(f"nonsym-recurrence[{p.family}]", f"BqJ recurrence at x={point}", reps)


def check_operator_invariants(p, max_deg: int = 8) -> VerificationReport:
    """D commutes with T1, T0 and Y; L under inversion of all parameters becomes (q/abcd) L."""
    D = op_daha("D", p)
    reps = []
    for g in ("T1", "T0", "Y"):
        G = op_daha(g, p)
        reps.append(op_equal_on_basis(D @ G, G @ D, max_deg, "laurent", suite="operators[AW]",
                                      relation=f"D {g} = {g} D"))
    Linv = op_L(p.inverted())
    reps.append(op_equal_on_basis(Linv, op_L(p) * (p.q / p.abcd), max_deg, "symmetric", suite="operators[AW]",
                                  relation="L at inverted parameters = (q/abcd) L"))
    return combine("operators[AW]", "operator invariants", reps)


def run_all(n_max: int = 8) -> VerificationReport:
    reps = []
    for fam in SCALAR_FAMILIES:
        p = default_params(fam)
        reps.append(check_eigen(p, n_max))
        reps.append(check_recurrence(p, n_max))
    reps.append(check_nonsym_eigen(P2, 6))
    reps.append(check_cdqh_eigen(default_params("CDqH"), 6))
    reps.append(check_bqj_vector_eigen(default_params("BqJ"), 6))
    reps.append(check_bqj_vector_eigen(default_params("LqJ"), 6))
    reps.append(check_nonsym_recurrence(P2, 5))
    reps.append(check_bqj_recurrence(default_params("BqJ"), 5))
    reps.append(check_operator_invariants(P2))
    return combine("eigen", "eigenvalue and recurrence suites", reps)
