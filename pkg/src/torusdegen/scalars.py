"""Exact arithmetic in a real quadratic field Q(sqrt(d)).

A :class:`QuadExtScalar` is ``a + b*sqrt(d)`` with rational ``a``, ``b`` and a
square-free ``d > 1``.  Comparisons are exact: the sign of ``a + b*sqrt(d)``
is decided by comparing ``a**2`` with ``b**2 * d`` when the signs of ``a`` and
``b`` disagree.  Plain ``int`` and ``Fraction`` operands are coerced into the
field of the other operand; two scalars with different ``d`` never mix.
"""

from enum import IntEnum
from fractions import Fraction
from functools import lru_cache
from math import isqrt
import numbers

from .errors import DivisionByZero, MismatchedField

__all__ = [
    "QuadExtScalar",
    "Sign",
    "Order",
    "qx",
    "qx_arith",
    "qx_compare",
    "qx_sign",
    "qx_to_interval",
    "format_rational",
    "is_squarefree",
]


class Sign(IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1


class Order(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@lru_cache(maxsize=None)
def is_squarefree(n):
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % (k * k) == 0:
            return False
        k += 1
    return True


def _sgn(x):
    return (x > 0) - (x < 0)


def format_rational(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class QuadExtScalar:
    """An element ``a + b*sqrt(d)`` of Q(sqrt(d)); immutable."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d=2):
        if not isinstance(d, int) or not is_squarefree(d):
            raise ValueError(f"d must be a square-free integer > 1, got {d!r}")
        object.__setattr__(self, "a", _as_fraction(a))
        object.__setattr__(self, "b", _as_fraction(b))
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("QuadExtScalar is immutable")

    def __reduce__(self):
        return (QuadExtScalar, (self.a, self.b, self.d))

    # coercion ----------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, QuadExtScalar):
            if other.d != self.d:
                raise MismatchedField(f"Q(sqrt({self.d})) vs Q(sqrt({other.d}))")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExtScalar(other, 0, self.d)
        return NotImplemented

    @property
    def is_rational(self):
        return self.b == 0

    def conjugate(self):
        return QuadExtScalar(self.a, -self.b, self.d)

    def norm(self):
        return self.a * self.a - self.b * self.b * self.d

    def to_fraction(self):
        if self.b != 0:
            raise ValueError(f"{self} is irrational")
        return self.a

    # arithmetic ----------------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExtScalar(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExtScalar(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExtScalar(self.a * o.a + self.b * o.b * self.d,
                             self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        n = o.norm()
        if n == 0:
            raise DivisionByZero("division by zero in Q(sqrt(%d))" % self.d)
        num = self * o.conjugate()
        return QuadExtScalar(num.a / n, num.b / n, self.d)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def __neg__(self):
        return QuadExtScalar(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return QuadExtScalar(1, 0, self.d) / (self ** -n)
        result = QuadExtScalar(1, 0, self.d)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # order -------------------------------------------------------------------
    def sign(self):
        sa, sb = _sgn(self.a), _sgn(self.b)
        if sb == 0:
            return Sign(sa)
        if sa == 0 or sa == sb:
            return Sign(sb)
        # opposite signs: compare a^2 with b^2 d
        return Sign(sa * _sgn(self.a * self.a - self.b * self.b * self.d))

    def _cmp(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return (self - o).sign()

    def __eq__(self, other):
        if isinstance(other, QuadExtScalar):
            return self.d == other.d and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

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

    def __bool__(self):
        return self.a != 0 or self.b != 0

    # numerics ------------------------------------------------------------------
    def to_interval(self, digits):
        """Rational ``(lo, hi)`` with ``lo <= self <= hi`` and ``hi - lo <= 10**-digits``."""
        if digits < 1:
            raise ValueError("digits must be >= 1")
        if self.b == 0:
            return self.a, self.a
        tol = Fraction(1, 10 ** digits)
        k = digits
        while True:
            scale = 10 ** k
            s = isqrt(self.d * scale * scale)
            lo, hi = Fraction(s, scale), Fraction(s + 1, scale)
            if abs(self.b) * (hi - lo) <= tol:
                break
            k += 1
        if self.b > 0:
            return self.a + self.b * lo, self.a + self.b * hi
        return self.a + self.b * hi, self.a + self.b * lo

    def __float__(self):
        lo, hi = self.to_interval(17)
        return float((lo + hi) / 2)

    # text --------------------------------------------------------------------
    def __str__(self):
        parts = []
        if self.a != 0 or self.b == 0:
            parts.append(format_rational(self.a))
        if self.b != 0:
            mag = abs(self.b)
            root = f"sqrt({self.d})" if mag == 1 else f"{format_rational(mag)}*sqrt({self.d})"
            if parts:
                parts.append(("- " if self.b < 0 else "+ ") + root)
            else:
                parts.append(("-" if self.b < 0 else "") + root)
        return " ".join(parts)

    def __repr__(self):
        return f"QuadExtScalar({format_rational(self.a)}, {format_rational(self.b)}, d={self.d})"


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, numbers.Rational):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"expected a rational, got {type(x).__name__}")


def qx(value, d=2):
    """Coerce ``value`` (int, Fraction, str or scalar) into Q(sqrt(d))."""
    if isinstance(value, QuadExtScalar):
        if value.d != d:
            raise MismatchedField(f"Q(sqrt({value.d})) vs Q(sqrt({d}))")
        return value
    if isinstance(value, str):
        from .textio import parse_scalar
        return parse_scalar(value, d)
    return QuadExtScalar(value, 0, d)


_OPS = {
    "add": lambda x, y: x + y,
    "sub": lambda x, y: x - y,
    "mul": lambda x, y: x * y,
    "div": lambda x, y: x / y,
}


def qx_arith(x, y, op):
    if x.d != y.d:
        raise MismatchedField(f"Q(sqrt({x.d})) vs Q(sqrt({y.d}))")
    return _OPS[op](x, y)


def qx_compare(x, y):
    if x.d != y.d:
        raise MismatchedField(f"Q(sqrt({x.d})) vs Q(sqrt({y.d}))")
    return Order(int((x - y).sign()))


def qx_sign(x):
    return x.sign()


def qx_to_interval(x, digits):
    return x.to_interval(digits)
