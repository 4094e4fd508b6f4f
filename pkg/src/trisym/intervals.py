"""Closed rational interval arithmetic for certified residual bounds."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from .polysolve import Polynomial
from .surd import QuadraticSurd


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("interval endpoints out of order")

    @classmethod
    def point(cls, v: Fraction) -> "Interval":
        v = Fraction(v)
        return cls(v, v)

    @classmethod
    def of(cls, v, prec: int = 40) -> "Interval":
        if isinstance(v, Interval):
            return v
        if isinstance(v, QuadraticSurd):
            lo, hi = v.bounds(prec)
            return cls(lo, hi)
        return cls.point(Fraction(v))

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def strictly_positive(self) -> bool:
        return self.lo > 0

    def strictly_negative(self) -> bool:
        return self.hi < 0

    def __add__(self, other) -> "Interval":
        o = Interval.of(other)
        return Interval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other) -> "Interval":
        return self + (-Interval.of(other))

    def __rsub__(self, other) -> "Interval":
        return Interval.of(other) + (-self)

    def __mul__(self, other) -> "Interval":
        o = Interval.of(other)
        prods = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Interval(min(prods), max(prods))

    __rmul__ = __mul__

    def recip(self) -> "Interval":
        if self.contains_zero():
            raise ZeroDivisionError("interval straddles zero")
        return Interval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other) -> "Interval":
        return self * Interval.of(other).recip()

    def __rtruediv__(self, other) -> "Interval":
        return Interval.of(other) * self.recip()

    def abs_bound(self) -> Fraction:
        return max(abs(self.lo), abs(self.hi))


def eval_poly_range(p: Polynomial, box: Interval) -> Interval:
    """Exact range for degree <= 2, conservative Horner enclosure otherwise."""
    if p.degree <= 1:
        vals = sorted((p(box.lo), p(box.hi)))
        return Interval(vals[0], vals[1])
    if p.degree == 2:
        candidates = [p(box.lo), p(box.hi)]
        crit = -p[1] / (2 * p[2])
        if box.lo <= crit <= box.hi:
            candidates.append(p(crit))
        return Interval(min(candidates), max(candidates))
    acc = Interval.point(Fraction(0))
    for c in reversed(p.coeffs):
        acc = acc * box + Interval.point(c)
    return acc
