"""Exact-rational reference values used to check the stream algorithms.

Nothing here calls into the stream code: enclosures are computed from
partial sums with explicit remainder bounds, and digit prefixes are read
by their names only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Tuple

__all__ = [
    "Rational", "CertifiedValue", "point", "oracle_e_minus2",
    "oracle_atan_inv", "oracle_pi_over_4", "check_contains",
    "prefix_interval", "digit_weight", "oracle_affine",
]

Rational = Fraction

_WEIGHT = {"L": Fraction(0), "C": Fraction(1, 2), "R": Fraction(1)}


@dataclass(frozen=True)
class CertifiedValue:
    """A closed rational interval known to contain the true value."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty enclosure [{self.lo}, {self.hi}]")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __add__(self, other: "CertifiedValue") -> "CertifiedValue":
        return CertifiedValue(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other: "CertifiedValue") -> "CertifiedValue":
        return CertifiedValue(self.lo - other.hi, self.hi - other.lo)

    def __mul__(self, other: "CertifiedValue") -> "CertifiedValue":
        products = [p * q for p in (self.lo, self.hi) for q in (other.lo, other.hi)]
        return CertifiedValue(min(products), max(products))

    def scale(self, q) -> "CertifiedValue":
        q = Fraction(q)
        return CertifiedValue(min(self.lo * q, self.hi * q), max(self.lo * q, self.hi * q))

    def shift(self, q) -> "CertifiedValue":
        q = Fraction(q)
        return CertifiedValue(self.lo + q, self.hi + q)

    def within(self, lo, hi) -> bool:
        return lo <= self.lo and self.hi <= hi


def point(v) -> CertifiedValue:
    v = Fraction(v)
    return CertifiedValue(v, v)


def oracle_e_minus2(terms: int) -> CertifiedValue:
    """``sum(1/k! for k in 2..terms)`` plus the remainder bound ``1/(terms! * terms)``."""
    if terms < 2:
        raise ValueError("terms must be at least 2")
    # sum_{k=2}^{t} 1/k! = (sum_{k=2}^{t} t!/k!) / t!
    num, f = 0, 1
    for k in range(terms, 1, -1):
        num += f
        f *= k
    denom = factorial(terms)
    s = Fraction(num, denom)
    return CertifiedValue(s, s + Fraction(1, denom * terms))


def oracle_atan_inv(k: int, terms: int) -> CertifiedValue:
    """``arctan(1/k)`` between the alternating partial sums ending at ``terms - 1`` and ``terms``."""
    if k < 2:
        raise ValueError("k must be at least 2")
    if terms < 1:
        raise ValueError("terms must be at least 1")
    prev = s = Fraction(0)
    for j in range(terms + 1):
        prev = s
        s += Fraction((-1) ** j, (2 * j + 1) * k ** (2 * j + 1))
    return CertifiedValue(min(prev, s), max(prev, s))


def oracle_pi_over_4(terms: int) -> CertifiedValue:
    return oracle_atan_inv(2, terms) + oracle_atan_inv(3, terms)


def check_contains(b, v: CertifiedValue) -> bool:
    """Whether dyadic bounds ``b`` (fields lo, hi, k) can hold the value ``v``.

    For a point this is membership; for a proper interval the two must meet.
    """
    scale = 1 << b.k
    blo, bhi = Fraction(b.lo, scale), Fraction(b.hi, scale)
    return v.lo <= bhi and blo <= v.hi


def digit_weight(name: str) -> Fraction:
    return _WEIGHT[name]


def prefix_interval(prefix: Iterable[str] | str) -> Tuple[Fraction, Fraction]:
    """Interval of every ``[0,1]`` value whose expansion starts with ``prefix``."""
    lo = Fraction(0)
    scale = Fraction(1)
    for name in prefix:
        scale /= 2
        lo += digit_weight(name) * scale
    return lo, lo + scale


def oracle_affine(coeffs: Tuple[int, int, int, int, int, int], x, y) -> Fraction:
    a, ap, b, bp, c, cp = coeffs
    return Fraction(a, ap) * Fraction(x) + Fraction(b, bp) * Fraction(y) + Fraction(c, cp)
