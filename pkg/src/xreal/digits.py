"""Digits, lazy digit streams and their interval semantics.

A stream ``d1 d2 d3 ...`` over the alphabet ``{L, C, R}`` denotes the real
number ``sum(alpha(d_i) / 2**i)`` in ``[0, 1]``, with ``alpha(L) = 0``,
``alpha(C) = 1/2`` and ``alpha(R) = 1``.  A prefix of length ``n`` pins the
value down to a dyadic interval of width ``2**-n``; :func:`bounds` computes
that interval with integer arithmetic only.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from typing import Callable, Iterable, Tuple

__all__ = [
    "Digit", "L", "C", "R", "Stream", "DyadicBounds",
    "alpha", "lift_value", "basic_interval",
    "cons", "from_prefix", "zero", "one",
    "take", "bounds", "approx_lower", "digits_to_str", "parse_digits",
]

# Forcing a cell recurses through every stream it depends on.  Series
# streams stack one addition per absorbed term, so a few thousand frames
# are needed for the larger constants.
if sys.getrecursionlimit() < 20000:
    sys.setrecursionlimit(20000)


class Digit(IntEnum):
    """A redundant binary digit.  The integer value is twice its weight."""

    L = 0
    C = 1
    R = 2

    def __repr__(self) -> str:
        return self.name

    __str__ = __repr__


L, C, R = Digit.L, Digit.C, Digit.R

_BASIC = {
    L: (Fraction(0), Fraction(1, 2)),
    C: (Fraction(1, 4), Fraction(3, 4)),
    R: (Fraction(1, 2), Fraction(1)),
}


def alpha(d: Digit) -> Fraction:
    """Numeric weight of a digit: 0, 1/2 or 1."""
    return Fraction(int(d), 2)


def lift_value(d: Digit, v) -> Fraction:
    """The value of ``d::s`` when ``s`` denotes ``v``, i.e. ``(v + alpha(d)) / 2``."""
    return (Fraction(v) + alpha(d)) / 2


def basic_interval(d: Digit) -> Tuple[Fraction, Fraction]:
    return _BASIC[d]


Pair = Tuple[Digit, "Stream"]


class Stream:
    """An infinite digit sequence, computed on demand one cell at a time.

    A cell is either already evaluated (``head`` and ``tail`` known) or holds
    a thunk returning the ``(head, tail)`` pair.  The thunk runs at most once
    per cell under normal use; two threads racing on the same cell may both
    run it, which is harmless because thunks are deterministic.
    """

    __slots__ = ("_head", "_tail", "_thunk")

    def __init__(self, thunk: Callable[[], Pair]):
        self._thunk = thunk
        self._head = None
        self._tail = None

    def force(self) -> Pair:
        thunk = self._thunk
        if thunk is not None:
            head, tail = thunk()
            self._head = head
            self._tail = tail
            self._thunk = None
            return head, tail
        return self._head, self._tail

    @property
    def head(self) -> Digit:
        return self.force()[0]

    @property
    def tail(self) -> "Stream":
        return self.force()[1]

    @property
    def is_forced(self) -> bool:
        return self._thunk is None

    def __iter__(self):
        s = self
        while True:
            d, s = s.force()
            yield d

    def __repr__(self) -> str:
        shown = []
        s = self
        while s._thunk is None and len(shown) < 16:
            shown.append(s._head.name)
            s = s._tail
        return f"<Stream {''.join(shown)}...>"


def cons(d: Digit, tail: Stream) -> Stream:
    """The already-evaluated cell ``d::tail``."""
    s = Stream.__new__(Stream)
    s._head = d
    s._tail = tail
    s._thunk = None
    return s


def from_prefix(prefix: Iterable[Digit] | str, tail: Stream) -> Stream:
    """Prepend a finite digit prefix (digits or an ``"LCR"`` string) to ``tail``."""
    digits = parse_digits(prefix) if isinstance(prefix, str) else list(prefix)
    s = tail
    for d in reversed(digits):
        s = cons(d, s)
    return s


def _constant(d: Digit) -> Stream:
    s = cons(d, None)
    s._tail = s
    return s


_ZERO = _constant(L)
_ONE = _constant(R)


def zero() -> Stream:
    """``LLL...``, the stream of 0."""
    return _ZERO


def one() -> Stream:
    """``RRR...``, the stream of 1."""
    return _ONE


def take(s: Stream, n: int) -> list[Digit]:
    out = []
    for _ in range(n):
        d, s = s.force()
        out.append(d)
    return out


@dataclass(frozen=True)
class DyadicBounds:
    """The closed interval ``[lo / 2**k, hi / 2**k]``."""

    lo: int
    hi: int
    k: int

    @property
    def lower(self) -> Fraction:
        return Fraction(self.lo, 1 << self.k)

    @property
    def upper(self) -> Fraction:
        return Fraction(self.hi, 1 << self.k)

    @property
    def width(self) -> Fraction:
        return Fraction(self.hi - self.lo, 1 << self.k)

    def __contains__(self, v) -> bool:
        v = Fraction(v)
        return self.lo <= v * (1 << self.k) <= self.hi

    def __str__(self) -> str:
        return f"{self.lo}/2^{self.k} <= value <= {self.hi}/2^{self.k}"


def bounds(s: Stream, n: int) -> DyadicBounds:
    """Interval of all reals sharing the first ``n`` digits of ``s``.

    Kept at scale ``k = n + 1`` so the half-unit weight of ``C`` stays an
    integer: after the prefix the interval is ``[lo, lo + 2] / 2**(n+1)``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    lo = 0
    for _ in range(n):
        d, s = s.force()
        lo = 2 * lo + d
    return DyadicBounds(lo, lo + 2, n + 1)


def approx_lower(s: Stream, n: int) -> Fraction:
    return bounds(s, n).lower


def digits_to_str(digits: Iterable[Digit]) -> str:
    return "".join(d.name for d in digits)


def parse_digits(text: str) -> list[Digit]:
    try:
        return [Digit[ch] for ch in text]
    except KeyError as exc:
        raise ValueError(f"not a digit string: {text!r}") from exc
