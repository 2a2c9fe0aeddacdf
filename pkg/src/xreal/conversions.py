"""Building digit streams from rationals, Dedekind cuts and Cauchy sequences,
and rendering streams as certified decimal strings."""

from __future__ import annotations

from typing import Callable, Tuple

from .digits import C, L, R, Stream

__all__ = [
    "rat_to_stream", "stream_of_cut", "stream_of_cauchy", "decimal_render",
    "cut_of_rational", "STRADDLE_MARKER",
]

STRADDLE_MARKER = "?"

CutPredicate = Callable[[int, int], bool]
RationalSeq = Callable[[int], Tuple[int, int]]


def rat_to_stream(p: int, q: int) -> Stream:
    """Stream for ``p/q`` with ``0 <= p <= q``.

    Greedy binary expansion: emit ``L`` while ``2p <= q``, otherwise ``R``.
    The result never contains ``C``.
    """
    if q <= 0 or not 0 <= p <= q:
        raise ValueError(f"rat_to_stream needs 0 <= p <= q and q > 0, got {p}/{q}")
    return _greedy(p, q)


def _greedy(p: int, q: int) -> Stream:
    def step():
        p2 = p << 1
        if p2 <= q:
            return L, _greedy(p2, q)
        return R, _greedy(p2 - q, q)
    return Stream(step)


def cut_of_rational(p: int, q: int) -> CutPredicate:
    """The cut ``decide(a, b) := p/q <= a/b`` (for ``b > 0``)."""
    return lambda a, b: p * b <= a * q


def stream_of_cut(decide: CutPredicate) -> Stream:
    """Bisection stream for the real described by a monotone cut.

    ``decide(a, b)`` answers "is the real <= a/b?".  Each step asks about the
    midpoint of the current interval and emits ``L`` on yes, ``R`` on no.
    """
    return _cut(decide, 0, 0)


def _cut(decide: CutPredicate, offset: int, shift: int) -> Stream:
    # After a prefix of weights w_1..w_k the remaining tail t satisfies
    # value = (t + offset) / 2**shift, so "t <= a/b" is
    # decide(a + offset*b, 2**shift * b).
    def step():
        if decide(1 + 2 * offset, 2 << shift):
            return L, _cut(decide, 2 * offset, shift + 1)
        return R, _cut(decide, 2 * offset + 1, shift + 1)
    return Stream(step)


def stream_of_cauchy(f: RationalSeq, g: Callable[[int], int],
                     n: int = 0, b: Tuple[int, int] = (0, 1)) -> Stream:
    """Digits of ``lim f(m)`` given a modulus ``g`` for the rate ``2**-n``.

    ``g`` must satisfy ``|f(m) - f(p)| < 2**-n`` whenever ``m, p >= g(n)``.
    ``b = (bn, bd)`` is the lower end of the interval fixed by the digits
    emitted so far; ``n`` is how many there are.  Fractions are left
    unnormalised, as in the integer formulation.
    """
    def step():
        vn, vd = f(g(n + 3))
        bn, bd = b
        if vd < 0:
            vn, vd = -vn, -vd
        scaled = 8 * (1 << n) * (vn * bd - vd * bn)
        if scaled <= 3 * vd * bd:
            return L, stream_of_cauchy(f, g, n + 1, b)
        if scaled <= 5 * vd * bd:
            nb = (4 * (1 << n) * bn + bd, 4 * (1 << n) * bd)
            return C, stream_of_cauchy(f, g, n + 1, nb)
        nb = (2 * (1 << n) * bn + bd, 2 * (1 << n) * bd)
        return R, stream_of_cauchy(f, g, n + 1, nb)
    return Stream(step)


def decimal_render(s: Stream, digits: int, cap: int | None = None) -> str:
    """``"0.d1...d<digits>"`` with every digit certified by ``bounds(s, n)``.

    Digits are those of the truncated decimal expansion.  If after ``cap``
    stream digits (default ``4*digits + 32``) the interval still straddles a
    decimal boundary, the certified part is printed followed by ``?``.
    """
    if digits < 0:
        raise ValueError("digits must be non-negative")
    if cap is None:
        cap = 4 * digits + 32
    scale = 10 ** digits
    lo, k = 0, 1
    # bounds(s, n) = [lo, lo + 2] / 2**(n+1); n is advanced in place.
    for n in range(cap + 1):
        if n:
            d, s = s.force()
            lo = 2 * lo + d
            k += 1
        lo_dec = (lo * scale) >> k
        hi_dec = ((lo + 2) * scale) >> k
        if lo_dec == hi_dec:
            return _format(lo_dec, digits)
    fixed = _common_prefix(_format(lo_dec, digits), _format(hi_dec, digits))
    return fixed + STRADDLE_MARKER


def _format(value: int, digits: int) -> str:
    whole, frac = divmod(value, 10 ** digits)
    text = f"{whole}.{frac:0{digits}d}" if digits else f"{whole}."
    return text


def _common_prefix(a: str, b: str) -> str:
    i = 0
    while i < min(len(a), len(b)) and a[i] == b[i]:
        i += 1
    out = a[:i]
    if "." not in out:
        # integer parts differ (value exactly 1): nothing after the point is certain
        return "0."
    return out
