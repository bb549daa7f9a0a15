"""Exact scalar and polynomial plumbing.

Everything here is built on :class:`fractions.Fraction`.  A :class:`Laurent`
is a finite map exponent -> coefficient in one named variable.  Coefficients
are normally rationals, but may themselves be Laurent polynomials in a
lower-ranked variable (the deformation variable ``t``), which is how the
limit machinery in :mod:`qaskey.limitops` evaluates operators with a symbolic
small parameter.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable, Iterable

# Variables of higher rank wrap variables of lower rank when they meet.
# "s" is a symbolic parameter below the deformation variable "t".
_RANK = {"s": -1, "t": 0}


def _rank(var: str) -> int:
    return _RANK.get(var, 1)


class QaskeyError(Exception):
    """Base class of all library errors."""


class ZeroPoint(QaskeyError):
    pass


class NotPolynomial(QaskeyError):
    """Raised when a division that should be exact leaves a remainder."""

    def __init__(self, numerator, denominator, remainder):
        self.numerator = numerator
        self.denominator = denominator
        self.remainder = remainder
        super().__init__(f"not a Laurent polynomial; remainder {remainder}")


class DenominatorVanishes(QaskeyError):
    def __init__(self, index, detail=""):
        self.index = index
        super().__init__(f"denominator vanishes at index {index} {detail}".rstrip())


class NotRationalSquare(QaskeyError):
    pass


class OutOfWindow(QaskeyError):
    def __init__(self, n, window):
        self.n = n
        self.window = window
        super().__init__(f"index {n} outside window {window}")


def Q(x) -> Fraction:
    """Coerce ints, strings like '3/7' and Fractions to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not allowed in exact arithmetic")
    return Fraction(x)


def fmt(x) -> str:
    """Serialize a rational (or nested Laurent) as a string."""
    if isinstance(x, Laurent):
        return json.dumps(x.to_json(), sort_keys=True)
    return str(x)


def rational_sqrt(x) -> Fraction:
    """Exact non-negative square root of a rational square."""
    x = Q(x)
    if x < 0:
        raise NotRationalSquare(f"{x} is negative")
    from math import isqrt

    p, r = x.numerator, x.denominator
    sp, sr = isqrt(p), isqrt(r)
    if sp * sp != p or sr * sr != r:
        raise NotRationalSquare(f"{x} is not the square of a rational")
    return Fraction(sp, sr)


def _norm_coeff(c):
    if isinstance(c, Laurent):
        if not c.c:
            return Fraction(0)
        if len(c.c) == 1 and 0 in c.c:
            return c.c[0]
        return c
    if isinstance(c, (int, str)):
        return Fraction(c)
    return c


def _inv_scalar(c):
    if isinstance(c, Laurent):
        return c.inverse()
    return 1 / c


class Laurent:
    """Immutable Laurent polynomial ``sum c[k] * var**k``."""

    __slots__ = ("c", "var", "_h")

    def __init__(self, coeffs=None, var: str = "z"):
        d = {}
        if coeffs:
            for k, v in coeffs.items():
                v = _norm_coeff(v)
                if v != 0:
                    d[int(k)] = v
        self.c = d
        self.var = var
        self._h = None

    # constructors -------------------------------------------------------
    @classmethod
    def const(cls, value, var="z"):
        return cls({0: value}, var)

    @classmethod
    def mono(cls, k=1, coeff=1, var="z"):
        return cls({k: coeff}, var)

    @classmethod
    def gen(cls, var="z"):
        return cls({1: 1}, var)

    @classmethod
    def from_json(cls, data, var="z"):
        return cls({int(k): Fraction(v) for k, v in data.items()}, var)

    # basic queries -------------------------------------------------------
    def __bool__(self):
        return bool(self.c)

    def is_zero(self):
        return not self.c

    def degree(self):
        return max(self.c) if self.c else None

    def low(self):
        return min(self.c) if self.c else None

    def coeff(self, k):
        return self.c.get(k, Fraction(0))

    def items(self):
        return sorted(self.c.items())

    def is_monomial(self):
        return len(self.c) == 1

    def is_constant(self):
        return not self.c or set(self.c) == {0}

    def is_symmetric(self):
        return all(self.c.get(-k, 0) == v for k, v in self.c.items())

    def is_polynomial(self):
        return not self.c or min(self.c) >= 0

    def constant_term(self):
        return self.c.get(0, Fraction(0))

    # coercion ----------------------------------------------------------
    def _same(self, other):
        if isinstance(other, Laurent):
            if other.var == self.var:
                return True
            if _rank(other.var) == _rank(self.var):
                raise TypeError(f"cannot mix variables {self.var} and {other.var}")
        return False

    def _defer(self, other):
        return isinstance(other, Laurent) and _rank(other.var) > _rank(self.var)

    # arithmetic ---------------------------------------------------------
    def __neg__(self):
        return Laurent({k: -v for k, v in self.c.items()}, self.var)

    def __pos__(self):
        return self

    # Python skips reflected methods between instances of the same class, so a
    # lower-ranked operand hands the operation to the higher-ranked one itself.
    def __add__(self, other):
        if self._defer(other):
            return other.__add__(self)
        if not self._same(other):
            other = Laurent({0: other}, self.var)
        d = dict(self.c)
        for k, v in other.c.items():
            d[k] = d.get(k, 0) + v
        return Laurent(d, self.var)

    __radd__ = __add__

    def __sub__(self, other):
        if self._defer(other):
            return (-other).__add__(self)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if self._defer(other):
            return other.__mul__(self)
        if self._same(other):
            d = {}
            for i, u in self.c.items():
                for j, v in other.c.items():
                    d[i + j] = d.get(i + j, 0) + u * v
            return Laurent(d, self.var)
        if isinstance(other, (Vec2, Mat2)):
            return NotImplemented
        other = _norm_coeff(other)
        if other == 0:
            return Laurent({}, self.var)
        return Laurent({k: v * other for k, v in self.c.items()}, self.var)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        if self._defer(other):
            return Laurent({0: self}, other.var) / other
        if self._same(other):
            return exact_div(self, other)
        inv = _inv_scalar(_norm_coeff(other))
        return self * inv

    def __rtruediv__(self, other):
        return Laurent({0: other}, self.var) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = Laurent({0: 1}, self.var)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self):
        """Inverse of a monomial with invertible coefficient."""
        if len(self.c) != 1:
            raise NotPolynomial(Laurent({0: 1}, self.var), self, None)
        (k, v), = self.c.items()
        return Laurent({-k: _inv_scalar(v)}, self.var)

    # comparisons --------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Laurent) and other.var == self.var:
            return self.c == other.c
        if isinstance(other, Laurent) and _rank(other.var) == _rank(self.var):
            return False
        try:
            other = _norm_coeff(other)
        except (TypeError, ValueError):
            return NotImplemented
        if not self.c:
            return other == 0
        return len(self.c) == 1 and 0 in self.c and self.c[0] == other

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if self._h is None:
            if self.is_constant():
                self._h = hash(self.constant_term())
            else:
                self._h = hash((self.var, frozenset(self.c.items())))
        return self._h

    # substitutions ------------------------------------------------------
    def shift(self, k: int):
        """Multiply by var**k."""
        return Laurent({e + k: v for e, v in self.c.items()}, self.var)

    def subs(self, scale=1, power: int = 1):
        """Return f(scale * var**power) for power in {1, -1}."""
        scale = _norm_coeff(scale)
        d = {}
        if scale == 1:
            for k, v in self.c.items():
                d[power * k] = v
        else:
            for k, v in self.c.items():
                d[power * k] = v * _spow(scale, k)
        return Laurent(d, self.var)

    def reflect(self):
        """f(1/var)."""
        return self.subs(1, -1)

    def map_coeffs(self, fn):
        return Laurent({k: fn(v) for k, v in self.c.items()}, self.var)

    def evaluate(self, x0):
        if isinstance(x0, (int, Fraction)) and x0 == 0:
            if any(k < 0 for k in self.c):
                raise ZeroPoint("evaluation at 0 of a polynomial with negative powers")
        total = 0
        for k, v in self.c.items():
            total = total + v * _spow(x0, k)
        return total if self.c else Fraction(0)

    __call__ = evaluate

    # output ---------------------------------------------------------------
    def to_json(self):
        return {str(k): fmt(v) for k, v in sorted(self.c.items())}

    def __repr__(self):
        if not self.c:
            return "0"
        parts = []
        for k, v in sorted(self.c.items()):
            if k == 0:
                parts.append(f"({v})")
            elif k == 1:
                parts.append(f"({v})*{self.var}")
            else:
                parts.append(f"({v})*{self.var}^{k}")
        return " + ".join(parts)


def _spow(x, k: int):
    if k < 0 and isinstance(x, Laurent):
        return x.inverse() ** (-k)
    return x ** k


def z_gen(var="z") -> Laurent:
    return Laurent.gen(var)


def _dense(p: Laurent, lo: int):
    """Coefficient list of var**(-lo) * p from degree 0 upwards."""
    hi = p.degree()
    out = [Fraction(0)] * (hi - lo + 1)
    for k, v in p.c.items():
        out[k - lo] = v
    return out


def exact_div(num: Laurent, den: Laurent) -> Laurent:
    """Exact Laurent division; raises NotPolynomial when den does not divide num.

    Both operands are cleared to ordinary polynomials by powers of the variable
    and divided by schoolbook long division from the top degree.
    """
    if not den.c:
        raise ZeroDivisionError("division by the zero polynomial")
    if not num.c:
        return Laurent({}, num.var)
    if len(den.c) == 1:
        return num * den.inverse()
    lo_n, lo_d = num.low(), den.low()
    a = _dense(num, lo_n)
    d = _dense(den, lo_d)
    m = len(d) - 1
    lead_inv = _inv_scalar(d[-1])
    if len(a) - 1 < m:
        raise NotPolynomial(num, den, num)
    quo = [Fraction(0)] * (len(a) - m)
    for i in range(len(a) - 1, m - 1, -1):
        ci = a[i]
        if ci == 0:
            continue
        fct = ci * lead_inv
        quo[i - m] = fct
        for j in range(m + 1):
            if d[j] != 0:
                a[i - m + j] = a[i - m + j] - fct * d[j]
    rem = {k + lo_n: v for k, v in enumerate(a[:m]) if v != 0}
    if rem:
        raise NotPolynomial(num, den, Laurent(rem, num.var))
    return Laurent({k + lo_n - lo_d: v for k, v in enumerate(quo)}, num.var)


def poly_gcd(f: Laurent, g: Laurent) -> Laurent:
    """Monic gcd of the polynomial parts (powers of the variable stripped)."""
    if not f.c:
        return g
    if not g.c:
        return f
    a = _dense(f, f.low())
    b = _dense(g, g.low())

    def trim(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    a, b = trim(a), trim(b)
    while b:
        # a mod b
        r = list(a)
        inv = 1 / b[-1]
        while len(r) >= len(b) and r:
            fct = r[-1] * inv
            off = len(r) - len(b)
            for j, bj in enumerate(b):
                r[off + j] -= fct * bj
            r.pop()
            trim(r)
        a, b = b, r
    lead = a[-1]
    return Laurent({k: v / lead for k, v in enumerate(a)}, f.var)


class RationalFunction:
    """Quotient num/den of Laurent polynomials with rational coefficients."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, normalize=True):
        var = num.var if isinstance(num, Laurent) else (den.var if isinstance(den, Laurent) else "z")
        if not isinstance(num, Laurent):
            num = Laurent.const(num, var)
        if den is None:
            den = Laurent.const(1, var)
        elif not isinstance(den, Laurent):
            den = Laurent.const(den, var)
        if not den.c:
            raise ZeroDivisionError("zero denominator")
        if normalize:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    @property
    def var(self):
        return self.num.var

    def is_polynomial(self):
        try:
            exact_div(self.num, self.den)
            return True
        except NotPolynomial:
            return False

    def to_laurent(self) -> Laurent:
        return exact_div(self.num, self.den)

    def _lift(self, other):
        if isinstance(other, RationalFunction):
            return other
        return RationalFunction(other if isinstance(other, Laurent) else Laurent.const(other, self.var), normalize=False)

    def __add__(self, other):
        o = self._lift(other)
        if o.den == self.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, normalize=False)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __eq__(self, other):
        o = self._lift(other)
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def evaluate(self, x0):
        d = self.den.evaluate(x0)
        if d == 0:
            raise ZeroDivisionError(f"pole at {x0}")
        return self.num.evaluate(x0) / d

    __call__ = evaluate

    def __repr__(self):
        return f"({self.num}) / ({self.den})"


def _normalize(num: Laurent, den: Laurent):
    if not num.c:
        return num, Laurent.const(1, den.var)
    generic = all(isinstance(v, Fraction) for v in list(num.c.values()) + list(den.c.values()))
    if generic and len(den.c) > 1:
        g = poly_gcd(num, den)
        if g.degree() and g.degree() > 0:
            num = exact_div(num, g)
            den = exact_div(den, g)
    # move the power of the variable and the leading constant into the numerator
    k = den.low()
    lead = den.c[den.degree()]
    scale = Laurent({-k: _inv_scalar(lead)}, den.var)
    return num * scale, den * scale


def rational_function_to_laurent(r: RationalFunction) -> Laurent:
    return r.to_laurent()


def laurent_eval(f: Laurent, z0) -> Fraction:
    z0 = Q(z0) if not isinstance(z0, Fraction) else z0
    if z0 == 0:
        raise ZeroPoint("evaluation point must be nonzero")
    return f.evaluate(z0)


# ---------------------------------------------------------------------------
# 2-vectors and 2x2 matrices with entries in any ring that supports + and *.


class Vec2:
    __slots__ = ("x", "y")

    def __init__(self, x, y):
        self.x = x
        self.y = y

    def __iter__(self):
        yield self.x
        yield self.y

    def __getitem__(self, i):
        return (self.x, self.y)[i]

    def __add__(self, o):
        return Vec2(self.x + o.x, self.y + o.y)

    def __sub__(self, o):
        return Vec2(self.x - o.x, self.y - o.y)

    def __neg__(self):
        return Vec2(-self.x, -self.y)

    def __mul__(self, s):
        if isinstance(s, (Vec2, Mat2)):
            return NotImplemented
        return Vec2(self.x * s, self.y * s)

    def __rmul__(self, s):
        if isinstance(s, Mat2):
            return NotImplemented
        return Vec2(s * self.x, s * self.y)

    def __eq__(self, o):
        if isinstance(o, Vec2):
            return self.x == o.x and self.y == o.y
        if o == 0:
            return self.x == 0 and self.y == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.x, self.y))

    def map(self, fn):
        return Vec2(fn(self.x), fn(self.y))

    def dot(self, o):
        return self.x * o.x + self.y * o.y

    def __repr__(self):
        return f"Vec2({self.x!r}, {self.y!r})"

    def to_json(self):
        return [_jsonable(self.x), _jsonable(self.y)]


class Mat2:
    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a, self.b, self.c, self.d = a, b, c, d

    @classmethod
    def diag(cls, u, v):
        return cls(u, 0, 0, v)

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)

    def rows(self):
        return ((self.a, self.b), (self.c, self.d))

    def __matmul__(self, o):
        if isinstance(o, Mat2):
            return Mat2(self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                        self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d)
        if isinstance(o, Vec2):
            return Vec2(self.a * o.x + self.b * o.y, self.c * o.x + self.d * o.y)
        return NotImplemented

    def __mul__(self, o):
        if isinstance(o, (Mat2, Vec2)):
            return self.__matmul__(o)
        return Mat2(self.a * o, self.b * o, self.c * o, self.d * o)

    def __rmul__(self, s):
        return Mat2(s * self.a, s * self.b, s * self.c, s * self.d)

    def __add__(self, o):
        return Mat2(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def __sub__(self, o):
        return Mat2(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __neg__(self):
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def __eq__(self, o):
        if not isinstance(o, Mat2):
            return NotImplemented
        return self.a == o.a and self.b == o.b and self.c == o.c and self.d == o.d

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def det(self):
        return self.a * self.d - self.b * self.c

    def adjugate(self):
        return Mat2(self.d, -self.b, -self.c, self.a)

    def inverse(self):
        det = self.det()
        return Mat2(self.d / det, -self.b / det, -self.c / det, self.a / det)

    def transpose(self):
        return Mat2(self.a, self.c, self.b, self.d)

    def map(self, fn):
        return Mat2(fn(self.a), fn(self.b), fn(self.c), fn(self.d))

    def __repr__(self):
        return f"Mat2([[{self.a!r}, {self.b!r}], [{self.c!r}, {self.d!r}]])"


def _jsonable(v):
    if isinstance(v, Laurent):
        return v.to_json()
    if isinstance(v, Vec2):
        return v.to_json()
    if isinstance(v, RationalFunction):
        return {"num": v.num.to_json(), "den": v.den.to_json()}
    if isinstance(v, (Fraction, int)):
        return str(v)
    if isinstance(v, complex):
        return [v.real, v.imag]
    if isinstance(v, float):
        return v
    return repr(v)


# ---------------------------------------------------------------------------
# Sequences g(n) on the integers.


class Seq:
    """Lazily evaluated sequence with an optional closed window [lo, hi].

    Reading outside the window raises :class:`OutOfWindow`; values are cached.
    """

    __slots__ = ("fn", "window", "_cache")

    def __init__(self, fn: Callable[[int], Any], window=None):
        self.fn = fn
        self.window = window
        self._cache = {}

    @classmethod
    def delta(cls, k: int):
        return cls(lambda n: Fraction(1) if n == k else Fraction(0))

    @classmethod
    def from_values(cls, values: dict):
        lo, hi = min(values), max(values)
        vals = dict(values)
        return cls(lambda n: vals[n], (lo, hi))

    def __call__(self, n: int):
        if self.window is not None and not (self.window[0] <= n <= self.window[1]):
            raise OutOfWindow(n, self.window)
        try:
            return self._cache[n]
        except KeyError:
            v = self.fn(n)
            self._cache[n] = v
            return v

    __getitem__ = __call__

    def __add__(self, o):
        if isinstance(o, Seq):
            return Seq(lambda n: self(n) + o(n))
        return Seq(lambda n: self(n) + o)

    __radd__ = __add__

    def __sub__(self, o):
        if isinstance(o, Seq):
            return Seq(lambda n: self(n) - o(n))
        return Seq(lambda n: self(n) - o)

    def __neg__(self):
        return Seq(lambda n: -self(n))

    def __mul__(self, s):
        return Seq(lambda n: self(n) * s)

    def __rmul__(self, s):
        return Seq(lambda n: s * self(n))

    def __repr__(self):
        return f"Seq(window={self.window})"


# ---------------------------------------------------------------------------
# Linear operators.

DOMAINS = ("laurent", "symmetric", "poly", "seq", "seq2", "vec2-sym", "vec2-poly")


class LinOp:
    """A linear operator given by a Python callable, closed under +, *, @."""

    __slots__ = ("fn", "name", "domain")

    def __init__(self, fn: Callable, name: str = "", domain: str = "laurent"):
        self.fn = fn
        self.name = name
        self.domain = domain

    def __call__(self, f):
        return self.fn(f)

    def __matmul__(self, other: "LinOp"):
        if not isinstance(other, LinOp):
            return NotImplemented
        return LinOp(lambda f: self.fn(other.fn(f)), f"{self.name}*{other.name}", self.domain)

    def __add__(self, other):
        if isinstance(other, LinOp):
            return LinOp(lambda f: self.fn(f) + other.fn(f), f"({self.name}+{other.name})", self.domain)
        return LinOp(lambda f: self.fn(f) + other * f, f"({self.name}+{other})", self.domain)

    __radd__ = __add__

    def __neg__(self):
        return LinOp(lambda f: -self.fn(f), f"-{self.name}", self.domain)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, s):
        if isinstance(s, LinOp):
            return self @ s
        return LinOp(lambda f: s * self.fn(f), f"{s}*{self.name}", self.domain)

    __rmul__ = __mul__

    def __repr__(self):
        return f"LinOp({self.name!r}, domain={self.domain})"


def identity(domain="laurent") -> LinOp:
    return LinOp(lambda f: f, "1", domain)


def scalar_op(s, domain="laurent") -> LinOp:
    return LinOp(lambda f: s * f, str(s), domain)


@lru_cache(maxsize=None)
def _z_pow(k, var):
    return Laurent({k: 1}, var)


def basis(domain: str, max_deg: int, var: str = "z"):
    """Finite test basis for a domain, as (label, element) pairs."""
    if domain == "laurent":
        return [(f"{var}^{k}", Laurent({k: 1}, var)) for k in range(-max_deg, max_deg + 1)]
    if domain == "symmetric":
        out = [("1", Laurent({0: 1}, var))]
        out += [(f"{var}^{k}+{var}^-{k}", Laurent({k: 1, -k: 1}, var)) for k in range(1, max_deg + 1)]
        return out
    if domain == "poly":
        return [(f"{var}^{k}", Laurent({k: 1}, var)) for k in range(0, max_deg + 1)]
    if domain == "seq":
        return [(f"delta_{k}", Seq.delta(k)) for k in range(0, max_deg + 1)]
    if domain == "seq2":
        return [(f"delta_{k}", Seq.delta(k)) for k in range(-max_deg, max_deg + 1)]
    if domain in ("vec2-sym", "vec2-poly"):
        inner = basis("symmetric" if domain == "vec2-sym" else "poly", max_deg, var)
        zero = Laurent({}, var)
        out = [(f"({lab},0)", Vec2(e, zero)) for lab, e in inner]
        out += [(f"(0,{lab})", Vec2(zero, e)) for lab, e in inner]
        return out
    raise ValueError(f"unknown domain {domain!r}")


def seq_window(domain: str, max_deg: int, reach: int = 8):
    if domain == "seq":
        return range(0, max_deg + reach + 1)
    return range(-(max_deg + reach), max_deg + reach + 1)


# ---------------------------------------------------------------------------
# Verification reports.


@dataclass
class VerificationReport:
    suite: str
    relation: str
    passed: bool
    checked: int = 0
    witness: dict | None = None
    detail: str = ""
    children: list = field(default_factory=list)

    @property
    def status(self):
        return "pass" if self.passed else "fail"

    def __bool__(self):
        return self.passed

    def to_json(self):
        out = {"suite": self.suite, "relation": self.relation, "status": self.status,
               "checked": self.checked}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.detail:
            out["detail"] = self.detail
        if self.children:
            out["children"] = [c.to_json() for c in self.children]
        return out

    def leaves(self):
        if not self.children:
            yield self
        for c in self.children:
            yield from c.leaves()

    def failures(self):
        return [r for r in self.leaves() if not r.passed]


def combine(suite: str, relation: str, reports: Iterable[VerificationReport]) -> VerificationReport:
    reports = list(reports)
    ok = all(r.passed for r in reports)
    return VerificationReport(suite, relation, ok, sum(r.checked for r in reports),
                              None, "", reports)


def _equal_outputs(u, v):
    return u == v


def op_equal_on_basis(A: LinOp, B: LinOp | None, max_deg: int, domain: str | None = None,
                      suite: str = "op-equal", relation: str = "", var: str = "z",
                      reach: int = 8) -> VerificationReport:
    """Decide A == B on the finite basis of their domain up to ``max_deg``.

    ``B=None`` means the zero operator.  For sequence domains the images are
    compared at every index of a window that covers their support.
    """
    domain = domain or A.domain
    relation = relation or f"{A.name} = {B.name if B is not None else 0}"
    n = 0
    for label, e in basis(domain, max_deg, var):
        lhs = A(e)
        rhs = B(e) if B is not None else None
        if domain in ("seq", "seq2"):
            for m in seq_window(domain, max_deg, reach):
                lv = lhs(m)
                rv = rhs(m) if rhs is not None else 0
                n += 1
                if lv != rv:
                    return VerificationReport(suite, relation, False, n,
                                              {"basis": label, "n": m, "lhs": _jsonable(lv),
                                               "rhs": _jsonable(rv)})
        else:
            n += 1
            ok = (lhs == rhs) if rhs is not None else (lhs == 0)
            if not ok:
                return VerificationReport(suite, relation, False, n,
                                          {"basis": label, "lhs": _jsonable(lhs),
                                           "rhs": _jsonable(rhs if rhs is not None else 0)})
    return VerificationReport(suite, relation, True, n)


def check_equal(suite: str, relation: str, lhs, rhs, **witness) -> VerificationReport:
    """Report for a single exact equality of two values."""
    if lhs == rhs:
        return VerificationReport(suite, relation, True, 1)
    w = {k: _jsonable(v) for k, v in witness.items()}
    w.update(lhs=_jsonable(lhs), rhs=_jsonable(rhs))
    return VerificationReport(suite, relation, False, 1, w)
