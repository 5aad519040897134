"""Exact arithmetic in Q(sqrt 3).

``QSqrt3(a, b)`` is ``a + b*sqrt(3)`` with rational ``a`` and ``b``.  Ordering
is exact: the sign of ``a + b*sqrt3`` follows from the signs of ``a`` and ``b``
and, when they disagree, from comparing ``a**2`` with ``3*b**2``.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational

_SQRT3 = math.sqrt(3.0)


def _q(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, Rational):
        return Fraction(x)
    raise TypeError(f"expected a rational, got {type(x).__name__}")


class QSqrt3:
    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = _q(a)
        self.b = _q(b)

    @classmethod
    def coerce(cls, x):
        if isinstance(x, QSqrt3):
            return x
        return cls(x, 0)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, QSqrt3):
            return QSqrt3(self.a + other.a, self.b + other.b)
        if isinstance(other, Rational):
            return QSqrt3(self.a + other, self.b)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return QSqrt3(-self.a, -self.b)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if isinstance(other, QSqrt3):
            return QSqrt3(self.a - other.a, self.b - other.b)
        if isinstance(other, Rational):
            return QSqrt3(self.a - other, self.b)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, Rational):
            return QSqrt3(other - self.a, -self.b)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, QSqrt3):
            return QSqrt3(self.a * other.a + 3 * self.b * other.b, self.a * other.b + self.b * other.a)
        if isinstance(other, Rational):
            return QSqrt3(self.a * other, self.b * other)
        return NotImplemented

    __rmul__ = __mul__

    def norm(self):
        """Field norm ``a**2 - 3 b**2``; zero only for zero."""
        return self.a * self.a - 3 * self.b * self.b

    def conjugate(self):
        return QSqrt3(self.a, -self.b)

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("QSqrt3 division by zero")
        return QSqrt3(self.a / n, -self.b / n)

    def __truediv__(self, other):
        if isinstance(other, QSqrt3):
            return self * other.inverse()
        if isinstance(other, Rational):
            return QSqrt3(self.a / other, self.b / other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, Rational):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = QSqrt3(1)
        for _ in range(k):
            out = out * self
        return out

    # -- order --------------------------------------------------------------

    def sign(self):
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        if (a > 0) == (b > 0):
            return 1 if a > 0 else -1
        # opposite signs: |a| vs sqrt3 |b|
        if a * a > 3 * b * b:
            return 1 if a > 0 else -1
        return 1 if b > 0 else -1

    def _cmp(self, other):
        if isinstance(other, (QSqrt3, Rational)):
            return (self - other).sign()
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, QSqrt3):
            return self.a == other.a and self.b == other.b
        if isinstance(other, Rational):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __lt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __float__(self):
        return float(self.a) + float(self.b) * _SQRT3

    # -- text ---------------------------------------------------------------

    def __repr__(self):
        return f"QSqrt3({self.a}, {self.b})"

    def __str__(self):
        return format_scalar(self)


R3 = QSqrt3(0, 1)

_TERM = re.compile(r"\s*([+-])?\s*(\d+(?:/\d+)?)?\s*(\*?\s*r3(?:\s*/\s*(\d+))?)?\s*")


def parse_scalar(text):
    """Parse ``"a/b"``, ``"a/b+c/d*r3"``, ``"1/2 + 1/3 r3"``, ``"r3/6"``..."""
    s = text.strip()
    if not s:
        raise ValueError("empty scalar")
    pos = 0
    a = Fraction(0)
    b = Fraction(0)
    seen = False
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse scalar {text!r}")
        sign, num, rad, rad_den = m.groups()
        if num is None and rad is None:
            raise ValueError(f"cannot parse scalar {text!r}")
        if seen and sign is None:
            raise ValueError(f"missing operator in {text!r}")
        coeff = Fraction(num) if num is not None else Fraction(1)
        if sign == "-":
            coeff = -coeff
        if rad is not None:
            if rad_den is not None:
                coeff /= int(rad_den)
            b += coeff
        else:
            a += coeff
        seen = True
        pos = m.end()
    return a if b == 0 else QSqrt3(a, b)


def format_scalar(x):
    """``"a/b"`` for rationals, ``"a/b+c/d*r3"`` otherwise."""
    if isinstance(x, QSqrt3):
        if x.b == 0:
            return str(x.a)
        sign = "-" if x.b < 0 else "+"
        return f"{x.a}{sign}{abs(x.b)}*r3"
    return str(Fraction(x))
