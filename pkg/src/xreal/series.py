"""Convergent series as digit streams, and their instances: e - 2,
stream multiplication, arctan(1/k) and pi/4.

A series engine computes ``x + y * sum(a_i for i >= n)``.  Before emitting a
digit it folds terms into the stream ``x`` until ``y * mu(n)`` is small
enough, where ``mu(n)`` bounds every tail sum starting at or after ``n``.
After each digit ``y`` doubles.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, Tuple, TypeVar

from .basic_ops import add, mult2
from .conversions import rat_to_stream
from .digits import C, Digit, L, R, Stream, cons, from_prefix, zero

__all__ = [
    "series_body", "GENERAL_EMIT_TABLE", "general_emit",
    "e_series", "e_absorb_step", "build_e_minus2", "number_e_minus2",
    "sum_mult_d", "mult_a", "mult",
    "PositiveSeries", "positive_series", "atan_inv", "pi_over_4",
]

A = TypeVar("A")


def series_body(f: Callable[[Stream, A], Stream], v: Stream, a: A) -> Stream:
    """Emit one digit of ``v + rho`` for an unknown ``0 <= rho <= 1/8``.

    ``v`` is inspected to depth two at most; ``f(rest, a)`` builds the
    continuation from the rescaled remainder of ``v``.
    """
    def step():
        d, vt = v.force()
        if d is R:
            return R, f(vt, a)
        d2, vtt = vt.force()
        if d2 is R:
            # CR = RL and LR = CL
            return (R if d is C else C), f(cons(L, vtt), a)
        return d, f(vt, a)
    return Stream(step)


def _emit_table() -> Dict[Tuple[Digit, ...], Tuple[Digit, Tuple[Digit, ...]]]:
    table = {}
    for pattern, out, rewrite in (
        ("RR", "R", ""), ("RC", "R", ""),
        ("RLC", "R", ""), ("RLR", "R", ""), ("RLL", "C", "RL"),
        ("CC", "C", ""),
        ("CLC", "C", ""), ("CLR", "C", ""), ("CLL", "L", "RL"),
        ("CRL", "C", ""), ("CRC", "C", ""), ("CRR", "R", "LR"),
        ("LL", "L", ""), ("LC", "L", ""),
        ("LRL", "L", ""), ("LRC", "L", ""), ("LRR", "C", "LR"),
    ):
        table[tuple(Digit[ch] for ch in pattern)] = (
            Digit[out], tuple(Digit[ch] for ch in rewrite))
    return table


#: Prefix of ``v`` -> (digit, replacement for the digits after the first).
#: An empty replacement means the continuation is simply ``v``'s tail.
GENERAL_EMIT_TABLE = _emit_table()


def general_emit(v: Stream) -> Tuple[Digit, Stream]:
    """First digit of ``v + rho`` for an unknown ``|rho| <= 1/16``.

    Returns the digit ``d`` and a stream for ``2v - alpha(d)``.  Reads two
    digits of ``v``, or three when the second one does not settle it.
    """
    d1, t1 = v.force()
    d2, t2 = t1.force()
    entry = GENERAL_EMIT_TABLE.get((d1, d2))
    if entry is None:
        d3, t3 = t2.force()
        entry = GENERAL_EMIT_TABLE[d1, d2, d3]
        out, rewrite = entry
        if rewrite:
            return out, from_prefix(rewrite, t3)
        return out, t1
    return entry[0], t1


# -- e - 2 = sum(1/k! for k >= 2) ----------------------------------------

def e_series(x: Stream, y: int, n: int, theta: int) -> Stream:
    """``x + y * sum(1/i! for i >= n)`` with ``theta = (n-1)!``.

    Requires ``4y <= theta*(n-1)``, ``n >= 2``, ``y >= 1`` and a total <= 1.
    The tail from ``n`` is below ``1/(theta*(n-1))``, so comparing ``8y``
    with ``theta*(n-1)`` decides whether term ``n`` must be folded in first;
    one term always suffices.
    """
    absorbed, n, theta = e_absorb_step(y, n, theta)
    if absorbed:
        x = add(x, rat_to_stream(y, theta))
    return series_body(_e_next, x, (2 * y, n, theta))


def e_absorb_step(y: int, n: int, theta: int) -> Tuple[bool, int, int]:
    """Integer bookkeeping of one ``e_series`` step.

    Returns whether term ``n`` (of value ``1/theta'``) is folded in, and the
    new ``(n, theta)``.
    """
    mu_inv = theta * (n - 1)
    if 8 * y <= mu_inv:
        return False, n, theta
    return True, n + 1, mu_inv + theta  # theta * n = n!


def _e_next(v: Stream, state: Tuple[int, int, int]) -> Stream:
    return e_series(v, *state)


def build_e_minus2() -> Stream:
    """A fresh, unshared stream for ``e - 2``."""
    return e_series(add(rat_to_stream(1, 2), rat_to_stream(1, 6)), 1, 4, 6)


_e_lock = threading.Lock()
_e_stream = None


def number_e_minus2() -> Stream:
    """The shared ``e - 2`` stream; its forced prefix is kept for reuse."""
    global _e_stream
    if _e_stream is None:
        with _e_lock:
            if _e_stream is None:
                _e_stream = build_e_minus2()
    return _e_stream


# -- multiplication --------------------------------------------------------

def sum_mult_d(d: Digit, u: Stream, v: Stream) -> Stream:
    """``u + alpha(d) * v / 2``."""
    if d is L:
        return u
    if d is C:
        return add(u, cons(L, cons(L, v)))
    return add(u, cons(L, v))


def mult_a(x: Stream, u: Stream, v: Stream) -> Stream:
    """``x + u*v``, valid when ``u*v < 1/4`` and ``x + u*v <= 1``.

    Each step folds the term ``alpha(d) * v / 2`` for the next digit ``d``
    of ``u`` into ``x``.
    """
    def step():
        d, w = u.force()
        return series_body(_mult_a_next, sum_mult_d(d, x, v), (w, v)).force()
    return Stream(step)


def _mult_a_next(x: Stream, p: Tuple[Stream, Stream]) -> Stream:
    return mult_a(x, *p)


def mult(x: Stream, y: Stream) -> Stream:
    """``x * y``: computes ``x * (y/4)`` and doubles twice."""
    return mult2(mult2(mult_a(zero(), x, cons(L, cons(L, y)))))


# -- positive series in general, arctan and pi ---------------------------

@dataclass(frozen=True)
class PositiveSeries:
    """A series of positive rational terms with a certified tail bound.

    ``term(i)`` and ``modulus(n)`` return ``(numerator, denominator)``;
    ``modulus(n)`` must strictly exceed every tail sum from ``m >= n``.
    """

    term: Callable[[int], Tuple[int, int]]
    modulus: Callable[[int], Tuple[int, int]]


def positive_series(series: PositiveSeries, x: Stream, y: int, n: int) -> Stream:
    """``x + y * sum(series.term(i) for i >= n)``, the total being <= 1."""
    while True:
        num, den = series.modulus(n)
        if 8 * y * num <= den:
            break
        tn, td = series.term(n)
        x = add(x, rat_to_stream(y * tn, td))
        n += 1
    return series_body(_positive_next, x, (series, 2 * y, n))


def _positive_next(v: Stream, state) -> Stream:
    series, y, n = state
    return positive_series(series, v, y, n)


def _atan_series(k: int) -> PositiveSeries:
    k2 = k * k

    # Terms of the alternating series for arctan(1/k), grouped in pairs:
    # 1/((4i+1) k^(4i+1)) - 1/((4i+3) k^(4i+3)).
    def term(i: int) -> Tuple[int, int]:
        p, q = 4 * i + 1, 4 * i + 3
        return q * k2 - p, p * q * k ** (4 * i + 3)

    # The ungrouped tail is alternating and decreasing, so its first term
    # bounds it strictly.
    def modulus(n: int) -> Tuple[int, int]:
        return 1, (4 * n + 1) * k ** (4 * n + 1)

    return PositiveSeries(term, modulus)


def atan_inv(k: int) -> Stream:
    """``arctan(1/k)`` for an integer ``k >= 2``."""
    if k < 2:
        raise ValueError(f"atan_inv needs k >= 2, got {k}")
    return positive_series(_atan_series(k), zero(), 1, 0)


@lru_cache(maxsize=None)
def pi_over_4() -> Stream:
    """``pi/4 = arctan(1/2) + arctan(1/3)``."""
    return add(atan_inv(2), atan_inv(3))
