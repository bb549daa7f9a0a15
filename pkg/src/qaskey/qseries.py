"""q-shifted factorials and basic hypergeometric series.

Terminating series are summed exactly, term by term, from the raw
definition of r phi s.  Infinite series and products are summed in floating
point (complex arguments allowed).
"""

from __future__ import annotations

from fractions import Fraction

from .core import DenominatorVanishes, QaskeyError


class NonConvergent(QaskeyError):
    pass


MAX_TERMS = 10 ** 6


def qpoch(x, q, n: int):
    """(x; q)_n = prod_{k<n} (1 - x q^k)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    out = 1
    xk = x
    for _ in range(n):
        out = out * (1 - xk)
        xk = xk * q
    if isinstance(out, int):
        return Fraction(out)
    return out


def qpoch_multi(xs, q, n: int):
    out = 1
    for x in xs:
        out = out * qpoch(x, q, n)
    return out


def _check_q(q):
    if not abs(q) < 1:
        raise ValueError(f"|q| < 1 required for infinite products and series, got q={q}")


def qpoch_inf(x, q, tol: float = 1e-16):
    """(x; q)_inf in floating point, truncated once |x q^k| < tol."""
    _check_q(q)
    out = 1.0
    xk = x
    k = 0
    while abs(xk) >= tol:
        out *= 1 - xk
        xk *= q
        k += 1
        if k > MAX_TERMS:
            raise NonConvergent("infinite product did not reach tolerance")
    return out


def phi_terminating(num, den, q, arg, n_terms: int):
    """Exact r phi s summed over k = 0..n_terms.

    The usual balancing factor ((-1)^k q^{k(k-1)/2})^{1+s-r} is included, so
    zero lower parameters behave as in the standard definition.  Raises
    :class:`DenominatorVanishes` if a lower factor (b_j q^k) or (q; q)_k
    vanishes before the series has terminated.
    """
    r, s = len(num), len(den)
    extra = 1 + s - r
    total = 1
    term = 1
    for k in range(n_terms):
        numf = 1
        for a in num:
            numf = numf * (1 - a * q ** k)
        if numf == 0:
            break
        denf = 1 - q ** (k + 1)
        for j, b in enumerate(den):
            fac = 1 - b * q ** k
            if fac == 0:
                raise DenominatorVanishes(k, f"(lower parameter #{j} = {b})")
            denf = denf * fac
        if denf == 0:
            raise DenominatorVanishes(k, "((q;q)_k)")
        term = term * numf / denf * arg
        if extra:
            term = term * ((-1) * q ** k) ** extra
        total = total + term
    if isinstance(total, int):
        return Fraction(total)
    return total


def phi_infinite_float(num, den, q, arg, tol: float = 1e-16, max_terms: int = MAX_TERMS):
    """Floating r phi s with r = s + 1 (no balancing factor).

    Returns ``(value, nterms)``.  Summation stops when a term is below
    ``tol`` relative to the partial sum.
    """
    _check_q(q)
    if len(num) != len(den) + 1:
        raise ValueError("only r = s + 1 series are supported in floating point")
    total = 1.0 + 0j if isinstance(arg, complex) else 1.0
    term = total
    qk = 1.0
    for k in range(max_terms):
        numf = 1.0
        for a in num:
            numf *= 1 - a * qk
        denf = 1 - qk * q
        for b in den:
            denf *= 1 - b * qk
        if denf == 0:
            raise DenominatorVanishes(k)
        term = term * numf / denf * arg
        total += term
        qk *= q
        if abs(term) <= tol * max(abs(total), 1e-300):
            return total, k + 2
    raise NonConvergent(f"no convergence after {max_terms} terms")
