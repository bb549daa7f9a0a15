"""Independent reference evaluations, written without the package's q-series code."""
from fractions import Fraction as F


def poch(x, q, k):
    out = F(1)
    for j in range(k):
        out *= 1 - x * q ** j
    return out


def series(num, den, q, arg, n):
    """sum_{k<=n} prod (num;q)_k / prod (den;q)_k / (q;q)_k * arg^k, with r = s + 1."""
    total = F(0)
    for k in range(n + 1):
        t = F(1)
        for a in num:
            t *= poch(a, q, k)
        for b in den:
            t /= poch(b, q, k)
        total += t / poch(q, q, k) * arg ** k
    return total


def aw(n, z, q, a, b, c, d):
    return series([q ** -n, a * b * c * d * q ** (n - 1), a * z, a / z], [a * b, a * c, a * d], q, q, n)


def cdqh(n, z, q, a, b, c):
    return series([q ** -n, a * z, a / z], [a * b, a * c], q, q, n)


def asc(n, z, q, a, b):
    return series([q ** -n, a * z, a / z], [a * b, 0], q, q, n)


def bqj(n, x, q, a, b, c):
    return series([q ** -n, a * b * q ** (n + 1), x], [a * q, c * q], q, q, n)


def lqj(n, x, q, a, b):
    return series([q ** -n, a * b * q ** (n + 1)], [a * q], q, q * x, n)


def dual_aw(q, a, b, c, d):
    """(a~, b~, c~, d~) with a~^2 = abcd/q, taking the positive root (rational inputs with square ratio)."""
    from math import isqrt
    s = a * b * c * d / q
    num, den = isqrt(s.numerator), isqrt(s.denominator)
    assert num * num == s.numerator and den * den == s.denominator
    at = F(num, den)
    return at, a * b / at, a * c / at, a * d / at


def eigen_aw(n, q, a, b, c, d):
    return q ** -n + a * b * c * d * q ** (n - 1)


def L_aw_at(f, z, q, a, b, c, d):
    """The AW q-difference operator applied to a callable f, at one point z."""
    up = (1 - a * z) * (1 - b * z) * (1 - c * z) * (1 - d * z) / ((1 - z * z) * (1 - q * z * z))
    dn = (a - z) * (b - z) * (c - z) * (d - z) / ((1 - z * z) * (q - z * z))
    return (1 + a * b * c * d / q) * f(z) + up * (f(q * z) - f(z)) + dn * (f(z / q) - f(z))


def aw_norm_ratio(n, q, a, b, c, d):
    """h_n / h_0 for R_n (normalized R_n[a] = 1), from the standard closed form of the norms."""
    def po(x, k):
        r = 1.0
        for j in range(k):
            r *= 1 - x * q ** j
        return r
    e = a * b * c * d
    h = ((1 - e / q) * po(q, n) * po(a * b, n) * po(a * c, n) * po(a * d, n) * po(b * c, n) * po(b * d, n)
         * po(c * d, n) / ((1 - e * q ** (2 * n - 1)) * po(e / q, n)))
    return h * a ** (2 * n) / (po(a * b, n) * po(a * c, n) * po(a * d, n)) ** 2
