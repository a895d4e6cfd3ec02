"""Exact arithmetic over Q(sqrt 2).

Bound envelopes are built from powers of the constant c = 1/sqrt(2).  Odd
powers of c are irrational, so envelope comparisons cannot be done with
Fraction alone and must not be done in floating point.  Root2Num represents
a + b*sqrt(2) with rational a, b, which is closed under addition and
multiplication and admits exact sign tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, sqrt
from typing import Union

Rationalish = Union[int, Fraction]


def _floor_p_plus_q_sqrt2(p: int, q: int) -> int:
    """Floor of p + q*sqrt(2) for integers p, q."""
    if q == 0:
        return p
    if q > 0:
        return p + isqrt(2 * q * q)
    # q*sqrt(2) is irrational, so ceil(|q|*sqrt(2)) = isqrt(2q^2) + 1.
    return p - isqrt(2 * q * q) - 1


@dataclass(frozen=True, eq=False)
class Root2Num:
    """Element a + b*sqrt(2) of the quadratic field Q(sqrt 2)."""

    a: Fraction
    b: Fraction

    @staticmethod
    def of(value: "Root2Num | Rationalish") -> "Root2Num":
        if isinstance(value, Root2Num):
            return value
        return Root2Num(Fraction(value), Fraction(0))

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self!r} is irrational")
        return self.a

    def _sign(self) -> int:
        a, b = self.a, self.b
        if a == 0 and b == 0:
            return 0
        if a >= 0 and b >= 0:
            return 1
        if a <= 0 and b <= 0:
            return -1
        # Mixed signs: compare a^2 with 2 b^2.  Equality cannot occur for
        # a, b rational and not both zero (sqrt 2 is irrational).
        if a > 0:  # b < 0
            return 1 if a * a > 2 * b * b else -1
        return 1 if 2 * b * b > a * a else -1

    def __add__(self, other):
        o = Root2Num.of(other)
        return Root2Num(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = Root2Num.of(other)
        return Root2Num(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return Root2Num.of(other) - self

    def __mul__(self, other):
        o = Root2Num.of(other)
        return Root2Num(self.a * o.a + 2 * self.b * o.b,
                        self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __neg__(self):
        return Root2Num(-self.a, -self.b)

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative exponents are not supported")
        out = Root2Num.of(1)
        base = self
        k = exponent
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, (Root2Num, int, Fraction)):
            return NotImplemented
        o = Root2Num.of(other)
        return self.a == o.a and self.b == o.b

    def __lt__(self, other):
        return (self - Root2Num.of(other))._sign() < 0

    def __le__(self, other):
        return (self - Root2Num.of(other))._sign() <= 0

    def __gt__(self, other):
        return (self - Root2Num.of(other))._sign() > 0

    def __ge__(self, other):
        return (self - Root2Num.of(other))._sign() >= 0

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * sqrt(2)

    def __repr__(self) -> str:
        return f"Root2Num({self.a}, {self.b})"

    def scaled_floor(self, scale: int) -> int:
        """Floor of (self * scale), computed exactly."""
        a, b = self.a * scale, self.b * scale
        den = a.denominator * b.denominator
        p = a.numerator * b.denominator
        q = b.numerator * a.denominator
        return _floor_p_plus_q_sqrt2(p, q) // den

    def scaled_ceil(self, scale: int) -> int:
        return -(-self).scaled_floor(scale)


# c = 1/sqrt(2) = sqrt(2)/2, the constant behind the unknown-fraction bounds.
SQRT_HALF = Root2Num(Fraction(0), Fraction(1, 2))


def clamp01(value: Root2Num) -> Root2Num:
    if value < 0:
        return Root2Num.of(0)
    if value > 1:
        return Root2Num.of(1)
    return value


def lower_rational(value: Root2Num, scale: int = 10 ** 18) -> Fraction:
    """Largest Fraction with denominator dividing `scale` that is <= value.

    Exact rationals are returned unchanged, so the enclosure only kicks in
    for genuinely irrational envelope values.
    """
    if value.is_rational:
        return value.as_fraction()
    return Fraction(value.scaled_floor(scale), scale)


def upper_rational(value: Root2Num, scale: int = 10 ** 18) -> Fraction:
    """Smallest Fraction with denominator dividing `scale` that is >= value."""
    if value.is_rational:
        return value.as_fraction()
    return Fraction(value.scaled_ceil(scale), scale)
