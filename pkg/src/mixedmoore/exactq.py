"""Exact arithmetic in the quadratic field Q(sqrt(v)).

Rationals are :class:`fractions.Fraction` (always reduced, positive
denominator).  A :class:`QuadElem` is ``a + b*sqrt(v)`` with rational
``a, b`` and a nonnegative integer radicand ``v``.  When ``v`` is a perfect
square the irrational part is folded into ``a`` at construction, so every
element over a square radicand is plain rational.

No floating point is used anywhere; signs are decided by squaring.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from numbers import Rational as _RationalABC

Rational = Fraction

__all__ = [
    "Rational",
    "RadicandMismatch",
    "QuadElem",
    "q_make",
    "q_add",
    "q_sub",
    "q_mul",
    "q_div",
    "q_pow",
    "q_sign",
    "q_is_rational_integer",
]


class RadicandMismatch(ValueError):
    """Raised when combining elements of different fields."""

    def __init__(self, v1: int, v2: int) -> None:
        super().__init__(f"radicand mismatch: {v1} != {v2}")


def _sign(x) -> int:
    return (x > 0) - (x < 0)


class QuadElem:
    __slots__ = ("_a", "_b", "_v")

    def __init__(self, a=0, b=0, v: int = 0) -> None:
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise ValueError(f"radicand must be a nonnegative integer, got {v!r}")
        a = Fraction(a)
        b = Fraction(b)
        if b:
            s = isqrt(v)
            if s * s == v:
                a += b * s
                b = Fraction(0)
        self._a = a
        self._b = b
        self._v = v

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @property
    def v(self) -> int:
        return self._v

    @classmethod
    def sqrt(cls, v: int) -> QuadElem:
        """The element ``sqrt(v)`` itself."""
        return cls(0, 1, v)

    def _coerce(self, other) -> QuadElem:
        if isinstance(other, QuadElem):
            if other._v != self._v:
                raise RadicandMismatch(self._v, other._v)
            return other
        if isinstance(other, (int, _RationalABC)) and not isinstance(other, bool):
            return QuadElem(other, 0, self._v)
        return NotImplemented

    def __repr__(self) -> str:
        return f"QuadElem({self._a}, {self._b}, {self._v})"

    def __str__(self) -> str:
        if not self._b:
            return str(self._a)
        return f"{self._a} + {self._b}*sqrt({self._v})"

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadElem):
            return (self._a, self._b, self._v) == (other._a, other._b, other._v)
        if isinstance(other, (int, _RationalABC)):
            return not self._b and self._a == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._a, self._b, self._v))

    def __bool__(self) -> bool:
        return bool(self._a) or bool(self._b)

    def __neg__(self) -> QuadElem:
        return QuadElem(-self._a, -self._b, self._v)

    def __add__(self, other) -> QuadElem:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadElem(self._a + other._a, self._b + other._b, self._v)

    __radd__ = __add__

    def __sub__(self, other) -> QuadElem:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadElem(self._a - other._a, self._b - other._b, self._v)

    def __rsub__(self, other) -> QuadElem:
        return -self + other

    def __mul__(self, other) -> QuadElem:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a1, b1, a2, b2 = self._a, self._b, other._a, other._b
        return QuadElem(a1 * a2 + b1 * b2 * self._v, a1 * b2 + a2 * b1, self._v)

    __rmul__ = __mul__

    def conjugate(self) -> QuadElem:
        return QuadElem(self._a, -self._b, self._v)

    def norm(self) -> Fraction:
        """Field norm ``a^2 - b^2 v``; zero only for the zero element."""
        return self._a * self._a - self._b * self._b * self._v

    def inverse(self) -> QuadElem:
        if not self:
            raise ZeroDivisionError("division by zero element")
        n = self.norm()
        # b != 0 only for non-square v, where the norm cannot vanish
        assert n != 0, f"zero norm for nonzero {self!r}"
        return QuadElem(self._a / n, -self._b / n, self._v)

    def __truediv__(self, other) -> QuadElem:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other) -> QuadElem:
        return self.inverse() * other

    def __pow__(self, e: int) -> QuadElem:
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = QuadElem(1, 0, self._v)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def sign(self) -> int:
        """Exact sign of ``a + b*sqrt(v)``."""
        sa, sb = _sign(self._a), _sign(self._b)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: the larger magnitude wins
        aa = self._a * self._a
        bb = self._b * self._b * self._v
        if aa > bb:
            return sa
        if aa < bb:
            return sb
        return 0

    def __lt__(self, other) -> bool:
        return (self - other).sign() < 0

    def __le__(self, other) -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other) -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other) -> bool:
        return (self - other).sign() >= 0

    def to_integer(self) -> int | None:
        """The value as an ``int`` if it is a rational integer, else None."""
        if self._b or self._a.denominator != 1:
            return None
        return self._a.numerator

    def __float__(self) -> float:
        # diagnostics only
        return float(self._a) + float(self._b) * self._v ** 0.5


def q_make(a, b, v: int) -> QuadElem:
    return QuadElem(a, b, v)


def q_add(x: QuadElem, y: QuadElem) -> QuadElem:
    return x + y


def q_sub(x: QuadElem, y: QuadElem) -> QuadElem:
    return x - y


def q_mul(x: QuadElem, y: QuadElem) -> QuadElem:
    return x * y


def q_div(x: QuadElem, y: QuadElem) -> QuadElem:
    return x / y


def q_pow(x: QuadElem, e: int) -> QuadElem:
    return x**e


def q_sign(x: QuadElem) -> int:
    return x.sign()


def q_is_rational_integer(x: QuadElem) -> int | None:
    return x.to_integer()
