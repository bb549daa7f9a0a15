"""Floating-point orthogonality on the unit circle by the trapezoid rule.

Polynomials and operator images are built exactly and only then evaluated at
the quadrature nodes.  numpy supplies the node arrays and reductions.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import Laurent, QaskeyError, Vec2, VerificationReport, combine
from .families import R_laurent, eigenvalue, make_params, vecE_laurent
from .qseries import NonConvergent

DEFAULT_NODES = 4096
DEFAULT_TOL = 1e-8


@dataclass(frozen=True)
class FloatParams:
    q: float
    a: float
    b: float
    c: float
    d: float

    @classmethod
    def from_tuple(cls, t):
        return cls(*(float(v) for v in t))

    def exact(self):
        """The same parameters as exact decimal rationals (0.9 -> 9/10)."""
        vals = [Fraction(repr(v)) for v in (self.q, self.a, self.b, self.c, self.d)]
        return make_params("AW", *vals, validate=False)

    def scalar_ok(self) -> bool:
        ps = (self.a, self.b, self.c, self.d)
        if not 0 < self.q < 1 or any(abs(v) > 1 for v in ps):
            return False
        return all(abs(ps[i] * ps[j] - 1) > 0 for i in range(4) for j in range(i + 1, 4))

    def vector_ok(self) -> bool:
        return self.scalar_ok() and self.a * self.b < 0


P3 = FloatParams(0.5, 0.9, -0.7, 0.6, 0.3)


def nodes(n: int = DEFAULT_NODES) -> np.ndarray:
    if n <= 0 or n & (n - 1):
        raise ValueError("node count must be a power of two")
    return np.exp(2j * np.pi * np.arange(n) / n)


def _qpoch_inf(x, q: float, tol: float = 1e-16):
    """(x; q)_inf elementwise, truncated once q^k < tol."""
    K = int(math.ceil(math.log(tol) / math.log(q))) + 1
    if K > 10_000:
        raise NonConvergent(q, K)
    out = np.ones_like(x, dtype=complex)
    for k in range(K):
        out = out * (1 - x * q ** k)
    return out


def _qpoch_inf_scalar(x: float, q: float, tol: float = 1e-16) -> float:
    return float(_qpoch_inf(np.array([x], dtype=complex), q, tol)[0].real)


def weight_prefactor(p: FloatParams, tol=1e-16) -> float:
    q, a, b, c, d = p.q, p.a, p.b, p.c, p.d
    num = 1.0
    for x in (q, a * b, a * c, a * d, b * c, b * d, c * d):
        num *= _qpoch_inf_scalar(x, q, tol)
    return num / (4 * math.pi * _qpoch_inf_scalar(a * b * c * d, q, tol))


def aw_weight(z, p: FloatParams, tol=1e-16) -> np.ndarray:
    """w_{a,b,c,d;q}[z] on unit-circle points z."""
    z = np.asarray(z, dtype=complex)
    q = p.q
    den = np.ones_like(z)
    for v in (p.a, p.b, p.c, p.d):
        den = den * _qpoch_inf(v * z, q, tol)
    r = _qpoch_inf(z * z, q, tol) / den
    return weight_prefactor(p, tol) * (r * np.conj(r)).real


def constant_C(p: FloatParams) -> float:
    q, a, b, c, d = p.q, p.a, p.b, p.c, p.d
    abcd = a * b * c * d
    return (-a ** 3 * b * (1 - a * b) * (1 - q * a * b) * (1 - a * c) * (1 - a * d) * (1 - b * c) * (1 - b * d)
            / ((1 - abcd) * (1 - q * abcd)))


def shifted(p: FloatParams) -> FloatParams:
    return FloatParams(p.q, p.q * p.a, p.q * p.b, p.c, p.d)


def weight_matrix_W(z, p: FloatParams, tol=1e-16):
    """The diagonal of W[z]: (w_{a,b,c,d}, C w_{qa,qb,c,d})."""
    return aw_weight(z, p, tol), constant_C(p) * aw_weight(z, shifted(p), tol)


def lval(f: Laurent, z: np.ndarray) -> np.ndarray:
    out = np.zeros_like(z, dtype=complex)
    for k, v in f.c.items():
        out = out + float(v) * z ** k
    return out


def vval(v: Vec2, z):
    return lval(v.x, z), lval(v.y, z)


def integrate(values: np.ndarray) -> complex:
    """Trapezoid rule for the contour integral of F dz/(iz) over |z| = 1."""
    return complex(2 * math.pi * np.mean(values))


def scalar_form(f, g, w, z) -> float:
    return integrate(lval(f, z) * lval(g, z) * w).real


def vector_form(f: Vec2, g: Vec2, W, z) -> float:
    f1, f2 = vval(f, z)
    g1, g2 = vval(g, z)
    return integrate(f1 * W[0] * g1 + f2 * W[1] * g2).real


def gram(p: FloatParams, kind: str = "scalar-AW", N: int = 5, n_nodes: int = DEFAULT_NODES) -> np.ndarray:
    """Gram matrix by quadrature.

    scalar-AW: R_m, R_n for 0 <= m, n <= N.  vector-E: vecE_m, vecE_n for
    -N <= m, n <= N (row/column index m + N).  matrix-E: the 2x2 blocks of
    [vecE_n, vecE_-n] for 0 <= m, n <= N, as a (2N+2) x (2N+2) matrix.
    """
    if N > 8:
        raise ValueError("N <= 8")
    z = nodes(n_nodes)
    ep = p.exact()
    if kind == "scalar-AW":
        w = aw_weight(z, p)
        vals = [lval(R_laurent(ep, n), z) for n in range(N + 1)]
        return np.array([[integrate(u * v * w).real for v in vals] for u in vals])
    W = weight_matrix_W(z, p)
    if kind == "vector-E":
        vecs = [vval(vecE_laurent(ep, n), z) for n in range(-N, N + 1)]
    elif kind == "matrix-E":
        vecs = []
        for n in range(N + 1):
            vecs.append(vval(vecE_laurent(ep, n), z))
            vecs.append(vval(vecE_laurent(ep, -n), z))
    else:
        raise ValueError(f"unknown Gram kind {kind!r}")
    return np.array([[integrate(u[0] * W[0] * v[0] + u[1] * W[1] * v[1]).real for v in vecs] for u in vecs])


def gram_to_csv(G: np.ndarray, dest, labels=None) -> None:
    """Write G with row and column labels to a path or an open text stream."""
    labels = labels if labels is not None else [str(i) for i in range(G.shape[0])]

    def write(fh):
        wr = csv.writer(fh)
        wr.writerow([""] + list(labels))
        for lab, row in zip(labels, G):
            wr.writerow([lab] + [repr(float(v)) for v in row])
    if hasattr(dest, "write"):
        write(dest)
    else:
        with open(dest, "w", newline="") as fh:
            write(fh)


def gram_labels(kind: str, N: int):
    if kind == "scalar-AW":
        return [f"R{n}" for n in range(N + 1)]
    if kind == "vector-E":
        return [f"E{n}" for n in range(-N, N + 1)]
    return [f"E{s}{n}" for n in range(N + 1) for s in ("+", "-")]


def _close(suite, relation, lhs, rhs, scale, tol) -> VerificationReport:
    err = abs(lhs - rhs) / max(scale, 1e-300)
    ok = bool(err <= tol)
    return VerificationReport(suite, relation, ok, 1,
                              None if ok else {"lhs": float(lhs), "rhs": float(rhs), "rel_err": float(err)})


def check_gram(p: FloatParams = P3, kind: str = "scalar-AW", N: int = 5, n_nodes: int = DEFAULT_NODES,
               tol: float = DEFAULT_TOL) -> VerificationReport:
    suite = f"ortho[{kind}]"
    if not p.scalar_ok() or (kind != "scalar-AW" and not p.vector_ok()):
        raise QaskeyError(f"parameters violate the constraints for {kind}")
    G = gram(p, kind, N, n_nodes)
    scale = float(np.max(np.abs(np.diag(G))))
    reps = []
    for i in range(G.shape[0]):
        reps.append(VerificationReport(suite, f"diag {i} > 0", bool(G[i, i] > 0), 1,
                                       None if G[i, i] > 0 else {"value": float(G[i, i])}))
        for j in range(G.shape[1]):
            if i != j:
                reps.append(_close(suite, f"G[{i},{j}] = 0", G[i, j], 0.0, scale, tol))
    if kind == "scalar-AW":
        reps.append(_close(suite, "G00 = 1", G[0, 0], 1.0, 1.0, tol))
    return combine(suite, f"{kind} Gram matrix", reps)


def check_matrix_gram(p: FloatParams = P3, N: int = 4, n_nodes: int = DEFAULT_NODES,
                      tol: float = DEFAULT_TOL, form: str = "derived") -> VerificationReport:
    """Block structure of the matrix-E Gram matrix.

    The blocks vanish for m != n.  For n >= 1 the diagonal block is diag(h_n, h_-n),
    and h_n, h_-n differ in general.  At n = 0 both columns are vecE_0, so the block
    is h_0 times the all-ones matrix.  ``form="printed"`` asserts h_n * I for every n.
    """
    if not p.vector_ok():
        raise QaskeyError("parameters violate the constraints for matrix-E")
    suite = "ortho[matrix-E]"
    G = gram(p, "matrix-E", N, n_nodes)
    scale = float(np.max(np.abs(np.diag(G))))
    reps = []
    for i in range(G.shape[0]):
        for j in range(G.shape[1]):
            if i // 2 != j // 2:
                reps.append(_close(suite, f"G[{i},{j}] = 0 (m != n)", G[i, j], 0.0, scale, tol))
    h0 = G[0, 0]
    for n in range(N + 1):
        blk = G[2 * n:2 * n + 2, 2 * n:2 * n + 2]
        reps.append(VerificationReport(suite, f"block {n} diagonal > 0", bool(blk[0, 0] > 0 and blk[1, 1] > 0), 2))
        if form == "printed":
            reps.append(_close(suite, f"block {n} = h_n I (offdiag)", blk[0, 1], 0.0, scale, tol))
            reps.append(_close(suite, f"block {n} = h_n I (diag)", blk[0, 0], blk[1, 1], scale, tol))
        elif n == 0:
            for v in blk.ravel():
                reps.append(_close(suite, "block 0 = h_0 [[1,1],[1,1]]", v, h0, scale, tol))
        else:
            reps.append(_close(suite, f"block {n} offdiag = 0", blk[0, 1], 0.0, scale, tol))
            reps.append(_close(suite, f"block {n} offdiag = 0", blk[1, 0], 0.0, scale, tol))
    return combine(suite, "matrix-E Gram matrix", reps)


def check_weight(p: FloatParams = P3, n_samples: int = 64, tol: float = DEFAULT_TOL) -> VerificationReport:
    suite = "ortho[weight]"
    z = nodes(n_samples)
    w = aw_weight(z, p)
    reps = [VerificationReport(suite, "w >= 0 at nodes", bool(np.all(w >= 0)), n_samples)]
    reps.append(_close(suite, "w(z) = w(conj z)", float(np.max(np.abs(w - aw_weight(np.conj(z), p)))), 0.0,
                       float(np.max(w)), tol))
    C = constant_C(p)
    reps.append(VerificationReport(suite, "C > 0", C > 0, 1, None if C > 0 else {"C": C}))
    W = weight_matrix_W(z, p)
    reps.append(VerificationReport(suite, "W entries >= 0", bool(np.all(W[0] >= 0) and np.all(W[1] >= 0)), n_samples))
    a, b = p.a, p.b
    rhs = (-a ** 3 * b * (1 - a * z) * (1 - a / z) * (1 - b * z) * (1 - b / z)).real
    # w vanishes at z = +-1 through (z^2; q)_inf; compare the ratio elsewhere
    live = w > 1e-12 * np.max(w)
    lhs = W[1][live] / w[live]
    rhs = rhs[live]
    reps.append(_close(suite, "C w_shift / w = -a^3 b (1-az)(1-a/z)(1-bz)(1-b/z)",
                       float(np.max(np.abs(lhs - rhs))), 0.0, float(np.max(np.abs(rhs))), tol))
    return combine(suite, "weights", reps)


def check_quadrature_convergence(p: FloatParams = P3, N: int = 5, tol: float = 1e-10) -> VerificationReport:
    G1 = gram(p, "scalar-AW", N, DEFAULT_NODES)
    G2 = gram(p, "scalar-AW", N, 2 * DEFAULT_NODES)
    d = float(np.max(np.abs(G1 - G2)))
    return VerificationReport("ortho[quadrature]", "doubling nodes changes Gram < 1e-10", d < tol, G1.size,
                              None if d < tol else {"max_change": d})


# ---------------------------------------------------------------------------
# adjointness and transforms


def _sym(k):
    return Laurent({k: 1, -k: 1}, "z") if k else Laurent.const(1, "z")


def _vec_tests(max_deg=2):
    z0 = Laurent({}, "z")
    out = []
    for k in range(max_deg + 1):
        out.append((f"(s{k},0)", Vec2(_sym(k), z0)))
        out.append((f"(0,s{k})", Vec2(z0, _sym(k))))
    return out


def _apply_mat(M, v: Vec2) -> Vec2:
    return Vec2(M.a * v.x + M.b * v.y, M.c * v.x + M.d * v.y)


def check_adjointness_and_transform(p: FloatParams = P3, max_n: int = 4, n_nodes: int = DEFAULT_NODES,
                                    tol: float = DEFAULT_TOL, form: str = "derived") -> VerificationReport:
    """Adjointness of Z^-1 for the vector form, and the scalar and vector transforms.

    With W as above, W Z^-1 = T1^-1 (Z^-1)^t T1 W pointwise, so the adjoint of Z^-1
    is T1 Z^-1 T1^-1 (``form="derived"``).  ``form="printed"`` swaps T1 and T1^-1.
    """
    from .core import Seq
    from .operators import matrix_Z, op_L, op_M, op_matrix, op_dual_side, op_N, op_nonsym_recurrence
    ep = p.exact()
    z = nodes(n_nodes)
    reps = []
    # scalar: hat(f)(n) = int f R_n w
    w = aw_weight(z, p)
    Rs = {n: R_laurent(ep, n) for n in range(max_n + 3)}
    Rv = {n: lval(R, z) for n, R in Rs.items()}

    def hat(f):
        fv = lval(f, z)
        return {n: integrate(fv * Rv[n] * w).real for n in Rv}
    L = op_L(ep, "AW")
    scale = 1.0
    for k in range(0, 4):
        f = _sym(k)
        hf, hLf = hat(f), hat(L(f))
        hZ = hat(f * Laurent({1: 1, -1: 1}, "z"))
        M = op_M(ep, "AW")(Seq(lambda n, hf=hf: hf[n] if n in hf else 0.0))
        scale = max(scale, max(abs(v) for v in hf.values()))
        for n in range(max_n + 1):
            reps.append(_close("ortho[scalar-transform]", f"hat(L f)(n) = lambda_n hat f, f=s{k} n={n}",
                               hLf[n], float(eigenvalue(ep, n)) * hf[n], scale, tol))
            reps.append(_close("ortho[scalar-transform]", f"M hat f = hat((Z+Z^-1) f), f=s{k} n={n}",
                               M(n), hZ[n], scale, tol))
        for j in range(0, 4):
            g = _sym(j)
            lhs = integrate(lval(L(f), z) * lval(g, z) * w).real
            rhs = integrate(lval(f, z) * lval(L(g), z) * w).real
            reps.append(_close("ortho[self-adjoint]", f"<L s{k}, s{j}> = <s{k}, L s{j}>", lhs, rhs,
                               max(1.0, abs(lhs)), tol))
    R2 = hat(Rs[2])
    for n in range(max_n + 1):
        if n != 2:
            reps.append(_close("ortho[scalar-transform]", f"hat(R_2)({n}) = 0", R2[n], 0.0, 1.0, tol))

    # vector form: the adjoint of Z^-1 under the matrix weight
    W = weight_matrix_W(z, p)
    Zi = matrix_Z(ep, inverse=True)
    T1 = op_matrix("T1", ep)
    T1i = op_matrix("T1inv", ep)

    outer, inner = (T1, T1i) if form == "derived" else (T1i, T1)
    cname = "T1 Z^-1 T1^-1" if form == "derived" else "T1^-1 Z^-1 T1"

    def conjZ(v):
        return outer(_apply_mat(Zi, inner(v)))
    tests = _vec_tests(2)
    for lf, f in tests:
        for lg, g in tests:
            lhs = vector_form(conjZ(f), g, W, z)
            rhs = vector_form(f, _apply_mat(Zi, g), W, z)
            reps.append(_close("ortho[adjoint]", f"<{cname} f, g> = <f, Z^-1 g> f={lf} g={lg}", lhs, rhs, max(1.0, abs(lhs)), tol))

    # vector transforms
    nrange = range(-max_n - 2, max_n + 3)
    Ev = {n: vval(vecE_laurent(ep, n), z) for n in nrange}

    def vhat(v):
        f1, f2 = vval(v, z)
        return {n: integrate(f1 * W[0] * Ev[n][0] + f2 * W[1] * Ev[n][1]).real for n in nrange}

    Y = op_matrix("Y", ep)
    Mrec = op_nonsym_recurrence(ep, "AW")
    N = op_N(ep)
    U = op_dual_side("U", ep)
    for lf, f in tests:
        hf = vhat(f)
        seq = Seq(lambda n, hf=hf: hf[n])
        sc = max(1.0, max(abs(v) for v in hf.values()))
        h_conj, h_Y, h_T = vhat(conjZ(f)), vhat(Y(f)), vhat(T1(f))
        Mg, Ng, Ug = Mrec(seq), N(seq), U(seq)
        for n in range(-max_n, max_n + 1):
            reps.append(_close("ortho[vector-transform]", f"M hat f = hat({cname} f) f={lf} n={n}",
                               Mg(n), h_conj[n], sc, tol))
            reps.append(_close("ortho[vector-transform]", f"N hat f = hat(Y f) f={lf} n={n}",
                               Ng(n), h_Y[n], sc, tol))
            reps.append(_close("ortho[vector-transform]", f"U hat f = hat(T f) f={lf} n={n}",
                               Ug(n), h_T[n], sc, tol))
    return combine("ortho", "adjointness and transforms", reps)


def run_all(p: FloatParams = P3, n_nodes: int = DEFAULT_NODES, tol: float = DEFAULT_TOL) -> VerificationReport:
    reps = [check_weight(p, tol=tol),
            check_gram(p, "scalar-AW", 5, n_nodes, tol),
            check_gram(p, "vector-E", 5, n_nodes, tol),
            check_matrix_gram(p, 4, n_nodes, tol),
            check_quadrature_convergence(p),
            check_adjointness_and_transform(p, 4, n_nodes, tol)]
    return combine("ortho", "orthogonality", reps)
