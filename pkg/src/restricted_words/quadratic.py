"""Exact arithmetic in Q(sqrt(D)) for a fixed nonnegative integer D.

A value is p + q*sqrt(D) with rational p, q.  When D is a perfect square
the irrational part is folded into the rational one at construction, so
grid points where the discriminant degenerates (D = 0 or 1) still work
and ``as_integer`` can recover plain ints from them.

Used by the closed form for the two-letter-forbidden-subword triangle,
whose individual terms involve the roots (a +- sqrt(a^2-4b))/(2b) but
whose sums are integers.
"""

from __future__ import annotations

import math
from fractions import Fraction


class QuadraticNumber:
    """p + q*sqrt(D), exact, immutable; supports ring ops and inversion."""

    __slots__ = ("p", "q", "D")

    def __init__(self, p, q, D: int) -> None:
        if D < 0:
            raise ValueError("D must be >= 0")
        p = Fraction(p)
        q = Fraction(q)
        root = math.isqrt(D)
        if root * root == D:
            # perfect square: no irrational part survives
            p, q = p + q * root, Fraction(0)
        self.p = p
        self.q = q
        self.D = D

    @classmethod
    def rational(cls, p, D: int) -> "QuadraticNumber":
        return cls(p, 0, D)

    @classmethod
    def sqrt(cls, D: int) -> "QuadraticNumber":
        return cls(0, 1, D)

    def _coerce(self, other) -> "QuadraticNumber | None":
        if isinstance(other, QuadraticNumber):
            if other.D != self.D and other.q != 0 and self.q != 0:
                raise ValueError(f"mixed discriminants {self.D} and {other.D}")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticNumber(other, 0, self.D)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticNumber(self.p + o.p, self.q + o.q, self.D)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.p, -self.q, self.D)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticNumber(
            self.p * o.p + self.q * o.q * self.D,
            self.p * o.q + self.q * o.p,
            self.D,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "QuadraticNumber":
        return QuadraticNumber(self.p, -self.q, self.D)

    def norm(self) -> Fraction:
        return self.p * self.p - self.q * self.q * self.D

    def inverse(self) -> "QuadraticNumber":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("no inverse: norm is zero")
        return QuadraticNumber(self.p / n, -self.q / n, self.D)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int) -> "QuadraticNumber":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = QuadraticNumber(1, 0, self.D)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.p == o.p and self.q == o.q

    def __hash__(self) -> int:
        return hash((self.p, self.q, self.D if self.q else 0))

    def is_rational(self) -> bool:
        return self.q == 0

    def as_fraction(self) -> Fraction:
        if self.q != 0:
            raise ValueError(f"{self!r} has a surviving irrational part")
        return self.p

    def as_integer(self) -> int:
        f = self.as_fraction()
        if f.denominator != 1:
            raise ValueError(f"{self!r} is not an integer")
        return f.numerator

    def __repr__(self) -> str:
        if self.q == 0:
            return f"QuadraticNumber({self.p})"
        return f"QuadraticNumber({self.p} + {self.q}*sqrt({self.D}))"
