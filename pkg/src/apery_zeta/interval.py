"""Closed intervals with exact rational endpoints."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from numbers import Rational
from typing import Union

Scalar = Union[int, Fraction]


def _frac(x: Scalar) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


@dataclass(frozen=True)
class RationalInterval:
    """The closed interval ``[lo, hi]``.

    Arithmetic is exact on the endpoints, so every operation returns the
    tightest interval containing all pointwise results (division requires a
    divisor that excludes zero). Plain ints and Fractions mix in freely as
    degenerate intervals.
    """

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        lo, hi = _frac(self.lo), _frac(self.hi)
        if lo > hi:
            raise ValueError(f"empty interval: lo={lo} > hi={hi}")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def point(cls, x: Scalar) -> RationalInterval:
        x = _frac(x)
        return cls(x, x)

    @classmethod
    def around(cls, center: Scalar, radius: Scalar) -> RationalInterval:
        center, radius = _frac(center), abs(_frac(radius))
        return cls(center - radius, center + radius)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def magnitude(self) -> Fraction:
        """Largest absolute value attained on the interval."""
        return max(abs(self.lo), abs(self.hi))

    def sign(self) -> int | None:
        """+1 or -1 when the whole interval is on one side of zero, else None.

        The degenerate interval [0, 0] has sign 0.
        """
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == self.hi == 0:
            return 0
        return None

    def contains(self, other: RationalInterval | Scalar) -> bool:
        if isinstance(other, RationalInterval):
            return self.lo <= other.lo and other.hi <= self.hi
        x = _frac(other)
        return self.lo <= x <= self.hi

    __contains__ = contains

    def overlaps(self, other: RationalInterval) -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def intersect(self, other: RationalInterval) -> RationalInterval:
        if not self.overlaps(other):
            raise ValueError(f"disjoint intervals {self} and {other}")
        return RationalInterval(max(self.lo, other.lo), min(self.hi, other.hi))

    def hull(self, other: RationalInterval) -> RationalInterval:
        return RationalInterval(min(self.lo, other.lo), max(self.hi, other.hi))

    def round_out(self, bits: int) -> RationalInterval:
        """Widen to endpoints on the grid ``2**-bits`` (keeps denominators small)."""
        scale = 1 << bits
        lo = (self.lo.numerator * scale) // self.lo.denominator
        hi = -((-self.hi.numerator * scale) // self.hi.denominator)
        return RationalInterval(Fraction(lo, scale), Fraction(hi, scale))

    def sqrt(self, bits: int) -> RationalInterval:
        """Outward enclosure of the square root on the grid ``2**-bits``."""
        if self.lo < 0:
            raise ValueError("square root of an interval reaching below zero")
        scale2 = 1 << (2 * bits)
        lo_scaled = (self.lo.numerator * scale2) // self.lo.denominator
        hi_scaled = -((-self.hi.numerator * scale2) // self.hi.denominator)
        lo = isqrt(lo_scaled)
        hi = isqrt(hi_scaled)
        if hi * hi < hi_scaled:
            hi += 1
        return RationalInterval(Fraction(lo, 1 << bits), Fraction(hi, 1 << bits))

    def __abs__(self) -> RationalInterval:
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return RationalInterval(Fraction(0), max(-self.lo, self.hi))

    def __neg__(self) -> RationalInterval:
        return RationalInterval(-self.hi, -self.lo)

    def __add__(self, other: RationalInterval | Scalar) -> RationalInterval:
        if isinstance(other, RationalInterval):
            return RationalInterval(self.lo + other.lo, self.hi + other.hi)
        x = _frac(other)
        return RationalInterval(self.lo + x, self.hi + x)

    __radd__ = __add__

    def __sub__(self, other: RationalInterval | Scalar) -> RationalInterval:
        return self + (-_as_interval(other))

    def __rsub__(self, other: Scalar) -> RationalInterval:
        return _as_interval(other) + (-self)

    def __mul__(self, other: RationalInterval | Scalar) -> RationalInterval:
        if not isinstance(other, RationalInterval):
            x = _frac(other)
            if x >= 0:
                return RationalInterval(self.lo * x, self.hi * x)
            return RationalInterval(self.hi * x, self.lo * x)
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return RationalInterval(min(products), max(products))

    __rmul__ = __mul__

    def reciprocal(self) -> RationalInterval:
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError(f"interval {self} contains zero")
        return RationalInterval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other: RationalInterval | Scalar) -> RationalInterval:
        return self * _as_interval(other).reciprocal()

    def __rtruediv__(self, other: Scalar) -> RationalInterval:
        return _as_interval(other) * self.reciprocal()

    def __pow__(self, exponent: int) -> RationalInterval:
        if exponent < 0:
            return (self ** (-exponent)).reciprocal()
        result = RationalInterval.point(1)
        for _ in range(exponent):
            result = result * self
        if exponent % 2 == 0 and exponent > 0:
            # even powers are nonnegative; the repeated product may overshoot
            a, b = abs(self.lo) ** exponent, abs(self.hi) ** exponent
            lo = Fraction(0) if self.lo <= 0 <= self.hi else min(a, b)
            result = RationalInterval(lo, max(a, b))
        return result

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


def _as_interval(x: RationalInterval | Scalar) -> RationalInterval:
    if isinstance(x, RationalInterval):
        return x
    return RationalInterval.point(x)
