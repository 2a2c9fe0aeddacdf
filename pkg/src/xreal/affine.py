"""Affine forms ``(a/ap)*x + (b/bp)*y + c/cp`` over two digit streams.

Output digits are emitted as soon as the extrema of the form fit inside a
basic interval; otherwise one digit of each contributing input is absorbed,
which halves the distance between the extrema.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import gcd
from typing import Optional, Tuple

from .digits import C, Digit, L, R, Stream

__all__ = [
    "AffineState", "positive_coefficients", "af_value", "extrema",
    "choose_digit", "try_emit", "prod_R", "prod_L", "prod_C", "PROD",
    "absorb", "measure", "axbyc_rec", "axbyc", "reduce_state",
]


@dataclass(frozen=True)
class AffineState:
    """Coefficients ``a/ap``, ``b/bp``, ``c/cp`` plus the operand streams."""

    a: int
    ap: int
    b: int
    bp: int
    c: int
    cp: int
    x: Stream
    y: Stream

    @property
    def coefficients(self) -> Tuple[int, int, int, int, int, int]:
        return (self.a, self.ap, self.b, self.bp, self.c, self.cp)


def positive_coefficients(s: AffineState) -> bool:
    return s.a >= 0 and s.b >= 0 and s.c >= 0 and s.ap > 0 and s.bp > 0 and s.cp > 0


def af_value(s: AffineState, x, y) -> Fraction:
    """Value of the form for given operand values ``x`` and ``y``."""
    return Fraction(s.a, s.ap) * x + Fraction(s.b, s.bp) * y + Fraction(s.c, s.cp)


def extrema(s: AffineState) -> Tuple[Fraction, Fraction]:
    lo = Fraction(s.c, s.cp)
    return lo, lo + Fraction(s.a, s.ap) + Fraction(s.b, s.bp)


def choose_digit(s: AffineState) -> Optional[Digit]:
    """Digit whose basic interval holds both extrema, tested in order R, L, C."""
    a, ap, b, bp, c, cp = s.coefficients
    # m = c/cp; M = m + span, span = (a*bp + b*ap) / (ap*bp)
    if 2 * c >= cp:
        return R
    den = ap * bp * cp
    top = c * ap * bp + (a * bp + b * ap) * cp  # M = top / den
    if 2 * top <= den:
        return L
    if 4 * c >= cp and 4 * top <= 3 * den:
        return C
    return None


def prod_R(s: AffineState) -> AffineState:
    if 2 * s.c < s.cp:
        raise ValueError("prod_R needs c/cp >= 1/2")
    return replace(s, a=2 * s.a, b=2 * s.b, c=2 * s.c - s.cp)


def prod_L(s: AffineState) -> AffineState:
    return replace(s, a=2 * s.a, b=2 * s.b, c=2 * s.c)


def prod_C(s: AffineState) -> AffineState:
    if 4 * s.c < s.cp:
        raise ValueError("prod_C needs c/cp >= 1/4")
    return replace(s, a=2 * s.a, b=2 * s.b, c=4 * s.c - s.cp, cp=2 * s.cp)


PROD = {L: prod_L, C: prod_C, R: prod_R}


def try_emit(s: AffineState) -> Optional[Tuple[Digit, AffineState]]:
    """``(digit, next_state)`` if a digit can be emitted now, else None."""
    d = choose_digit(s)
    if d is None:
        return None
    return d, PROD[d](s)


def _add_weight(c: int, cp: int, coeff: int, den: int, d: Digit) -> Tuple[int, int]:
    # c/cp + coeff * alpha(d) / (2 * den); alpha(R) = 1, alpha(C) = 1/2
    if d is L or coeff == 0:
        return c, cp
    den = 2 * den if d is R else 4 * den
    return c * den + coeff * cp, cp * den


def absorb(s: AffineState) -> AffineState:
    """Read one digit from each operand with a nonzero coefficient."""
    a, ap, b, bp, c, cp = s.coefficients
    x, y = s.x, s.y
    if a:
        dx, x = x.force()
        c, cp = _add_weight(c, cp, a, ap, dx)
        ap = 2 * ap
    if b:
        dy, y = y.force()
        c, cp = _add_weight(c, cp, b, bp, dy)
        bp = 2 * bp
    return AffineState(a, ap, b, bp, c, cp, x, y)


def measure(s: AffineState) -> int:
    """Least ``k >= 0`` with ``4 * (a/ap + b/bp) < 2**k``."""
    lhs = 4 * (s.a * s.bp + s.b * s.ap)
    den = s.ap * s.bp
    if lhs < den:
        return 0
    k = max(lhs.bit_length() - den.bit_length(), 0)
    while lhs >= den << k:
        k += 1
    while k and lhs < den << (k - 1):
        k -= 1
    return k


def reduce_state(s: AffineState) -> AffineState:
    """Divide each fraction by its own gcd; the denoted form is unchanged."""
    ga, gb, gc = gcd(s.a, s.ap), gcd(s.b, s.bp), gcd(s.c, s.cp)
    if ga == gb == gc == 1:
        return s
    return AffineState(s.a // ga, s.ap // ga, s.b // gb, s.bp // gb,
                       s.c // gc, s.cp // gc, s.x, s.y)


def axbyc_rec(s: AffineState) -> Tuple[Digit, AffineState, int]:
    """Absorb until a digit can be chosen.

    Returns the digit, the absorbed (not yet rescaled) state and the number
    of absorption steps, which never exceeds ``measure(s)``.
    """
    count = 0
    while True:
        d = choose_digit(s)
        if d is not None:
            return d, s, count
        s = absorb(s)
        count += 1


def axbyc(s: AffineState, gcd_reduce: bool = True) -> Stream:
    """Stream denoting the form's value, which must lie in [0, 1]."""
    if not positive_coefficients(s):
        raise ValueError(f"coefficients violate sign conditions: {s.coefficients}")
    return _axbyc(s, gcd_reduce)


def _axbyc(s: AffineState, gcd_reduce: bool) -> Stream:
    def step():
        d, t, _ = axbyc_rec(s)
        nxt = PROD[d](t)
        assert positive_coefficients(nxt)
        if gcd_reduce:
            nxt = reduce_state(nxt)
        return d, _axbyc(nxt, gcd_reduce)
    return Stream(step)
