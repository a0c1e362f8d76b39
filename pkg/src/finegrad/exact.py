"""Exact scalars: rationals and Gaussian rationals Q(i).

Rationals are :class:`fractions.Fraction`.  :class:`GaussianRational`
keeps a common denominator for its two parts.

Text literals follow the catalog format::

    1    -1/2*i    1+1*i    3/4-5/6*i    i
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from numbers import Rational as _RationalABC

from .errors import DivisionByZero

Rational = Fraction

_Q = r"\d+(?:/\d+)?"
_REAL_RE = re.compile(rf"^([+-]?{_Q})$")
_IMAG_RE = re.compile(rf"^([+-]?)({_Q})?\*?i$")
_CPLX_RE = re.compile(rf"^([+-]?{_Q})([+-])({_Q})?\*?i$")


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class GaussianRational:
    """Immutable element ``re + im*i`` of Q(i).

    Stored as integers (a + b*i)/d with d > 0 and gcd(a, b, d) = 1, so
    Gaussian integers never touch a gcd and other values need only one.
    """

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, re=0, im=0):
        if type(re) is int and type(im) is int:
            a, b, d = re, im, 1
        else:
            r, j = _frac(re), _frac(im)
            d = r.denominator * j.denominator // gcd(r.denominator, j.denominator)
            a = r.numerator * (d // r.denominator)
            b = j.numerator * (d // j.denominator)
        object.__setattr__(self, "_a", a)
        object.__setattr__(self, "_b", b)
        object.__setattr__(self, "_d", d)

    @classmethod
    def _make(cls, a: int, b: int, d: int) -> "GaussianRational":
        if d != 1:
            g = gcd(a, b, d)
            if g != 1:
                a, b, d = a // g, b // g, d // g
        z = object.__new__(cls)
        object.__setattr__(z, "_a", a)
        object.__setattr__(z, "_b", b)
        object.__setattr__(z, "_d", d)
        return z

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, str):
            return parse_scalar(x)
        if isinstance(x, complex):
            raise TypeError("floating point complex numbers are not exact")
        return cls(x, 0)

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, GaussianRational):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = GaussianRational(other)
        d1, d2 = self._d, other._d
        if d1 == d2:
            return GaussianRational._make(self._a + other._a, self._b + other._b, d1)
        return GaussianRational._make(self._a * d2 + other._a * d1, self._b * d2 + other._b * d1, d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational._make(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if not isinstance(other, GaussianRational):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = GaussianRational(other)
        d1, d2 = self._d, other._d
        if d1 == d2:
            return GaussianRational._make(self._a - other._a, self._b - other._b, d1)
        return GaussianRational._make(self._a * d2 - other._a * d1, self._b * d2 - other._b * d1, d1 * d2)

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other) - self
        return NotImplemented

    def __mul__(self, other):
        if not isinstance(other, GaussianRational):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = GaussianRational(other)
        a, b, c, e = self._a, self._b, other._a, other._b
        if not b and not e:
            return GaussianRational._make(a * c, 0, self._d * other._d)
        return GaussianRational._make(a * c - b * e, a * e + b * c, self._d * other._d)

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        a, b, d = self._a, self._b, self._d
        n = a * a + b * b
        if not n:
            raise DivisionByZero("inverse of zero in Q(i)")
        return GaussianRational._make(d * a, -d * b, n)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise DivisionByZero("division by zero in Q(i)")
            other = GaussianRational(other)
        if isinstance(other, GaussianRational):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other) * self.inverse()
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> "GaussianRational":
        return GaussianRational._make(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        """|z|^2, a non-negative rational."""
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    def is_real(self) -> bool:
        return not self._b

    # comparison / hashing -------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self._a == other._a and self._b == other._b and self._d == other._d
        if isinstance(other, int):
            return not self._b and self._d == 1 and self._a == other
        if isinstance(other, Fraction):
            return not self._b and self._a * other.denominator == other.numerator * self._d
        return NotImplemented

    def __hash__(self):
        if not self._b:
            return hash(self._a) if self._d == 1 else hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __bool__(self):
        return bool(self._a) or bool(self._b)

    def __repr__(self):
        return f"GaussianRational({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


GQ = GaussianRational
ZERO = GaussianRational(0, 0)
ONE = GaussianRational(1, 0)
I = GaussianRational(0, 1)


def gq_mul(a, b) -> GaussianRational:
    return GQ.coerce(a) * GQ.coerce(b)


def gq_inv(a) -> GaussianRational:
    return GQ.coerce(a).inverse()


def phase_ratio(alpha) -> GaussianRational:
    """conj(alpha)/alpha, a unit-modulus element of Q(i)."""
    alpha = GQ.coerce(alpha)
    if not alpha:
        raise DivisionByZero("phase ratio of zero")
    return alpha.conj() / alpha


def unit_root(z) -> GaussianRational:
    """Some alpha with phase_ratio(alpha) == z, for |z| == 1.

    Fourth roots of unity use the fixed table 1->1, -1->i, i->1-i, -i->1+i;
    any other unit of Q(i) gets alpha = 1 + conj(z).
    """
    z = GQ.coerce(z)
    if z.norm() != 1:
        raise ValueError(f"{z} is not of modulus one")
    table = {ONE: ONE, -ONE: I, I: ONE - I, -I: ONE + I}
    if z in table:
        return table[z]
    return ONE + z.conj()


def _parse_q(text: str) -> Fraction:
    return Fraction(text)


def parse_scalar(text: str) -> GaussianRational:
    """Parse a scalar literal such as ``-1/2*i`` or ``1+1*i``."""
    s = "".join(str(text).split())
    if not s:
        raise ValueError("empty scalar literal")
    m = _REAL_RE.match(s)
    if m:
        return GaussianRational(_parse_q(m.group(1)), 0)
    m = _IMAG_RE.match(s)
    if m:
        mag = _parse_q(m.group(2)) if m.group(2) else Fraction(1)
        return GaussianRational(0, -mag if m.group(1) == "-" else mag)
    m = _CPLX_RE.match(s)
    if m:
        mag = _parse_q(m.group(3)) if m.group(3) else Fraction(1)
        return GaussianRational(_parse_q(m.group(1)), -mag if m.group(2) == "-" else mag)
    raise ValueError(f"bad scalar literal: {text!r}")


def format_scalar(z) -> str:
    z = GQ.coerce(z)
    re_, im = z.re, z.im
    if not im:
        return str(re_)
    imag = "i" if abs(im) == 1 else f"{abs(im)}*i"
    if not re_:
        return ("-" if im < 0 else "") + imag
    return f"{re_}{'-' if im < 0 else '+'}{imag}"
