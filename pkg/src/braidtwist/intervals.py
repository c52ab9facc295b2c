"""Closed intervals with exact rational endpoints."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = ["RationalInterval", "as_fraction", "format_rational"]


def as_fraction(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings; floats are refused."""
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass a Fraction or a 'p/q' string")
    return Fraction(x)


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


@dataclass(frozen=True)
class RationalInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = as_fraction(self.lo), as_fraction(self.hi)
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def point(cls, x) -> RationalInterval:
        return cls(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, x) -> bool:
        if isinstance(x, RationalInterval):
            return self.lo <= x.lo and x.hi <= self.hi
        x = as_fraction(x)
        return self.lo <= x <= self.hi

    def intersects(self, other: RationalInterval) -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def intersection(self, other: RationalInterval) -> RationalInterval:
        if not self.intersects(other):
            raise ValueError(f"{self} and {other} are disjoint")
        return RationalInterval(max(self.lo, other.lo), min(self.hi, other.hi))

    def __add__(self, other) -> RationalInterval:
        if isinstance(other, RationalInterval):
            return RationalInterval(self.lo + other.lo, self.hi + other.hi)
        x = as_fraction(other)
        return RationalInterval(self.lo + x, self.hi + x)

    __radd__ = __add__

    def __neg__(self) -> RationalInterval:
        return RationalInterval(-self.hi, -self.lo)

    def __sub__(self, other) -> RationalInterval:
        if isinstance(other, RationalInterval):
            return self + (-other)
        return self + (-as_fraction(other))

    def __mul__(self, c) -> RationalInterval:
        c = as_fraction(c)
        a, b = self.lo * c, self.hi * c
        return RationalInterval(min(a, b), max(a, b))

    __rmul__ = __mul__

    def __abs__(self) -> RationalInterval:
        """Enclosure of ``{|x| : x in self}``."""
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return RationalInterval(0, max(-self.lo, self.hi))

    def __str__(self) -> str:
        return f"[{format_rational(self.lo)}, {format_rational(self.hi)}]"

    def to_json(self) -> list[str]:
        return [format_rational(self.lo), format_rational(self.hi)]
