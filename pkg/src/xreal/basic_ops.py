"""Digit-level automata: half-sum, addition, doubling, complement and
subtraction on streams denoting values in [0, 1]."""

from __future__ import annotations

from typing import NamedTuple, Optional, Tuple

from .digits import C, Digit, L, R, Stream, cons, one, zero

__all__ = [
    "HalfSumCase", "HALF_SUM_TABLE", "half_sum", "add", "mult2",
    "one_minus", "minus_half", "sub",
]


class HalfSumCase(NamedTuple):
    """``half_sum(xp ++ x, yp ++ y) = out :: half_sum(x', y')``.

    ``xp``/``yp`` are the matched prefixes (one or two digits).  For a
    two-digit prefix the recursive argument is ``x_head :: x``; for a
    one-digit prefix it is the remaining stream itself and ``x_head`` is None.
    """

    xp: Tuple[Digit, ...]
    yp: Tuple[Digit, ...]
    out: Digit
    x_head: Optional[Digit]
    y_head: Optional[Digit]


def _case(xp: str, yp: str, out: str, xh: str | None = None, yh: str | None = None):
    return HalfSumCase(tuple(Digit[c] for c in xp), tuple(Digit[c] for c in yp),
                       Digit[out], xh and Digit[xh], yh and Digit[yh])


HALF_SUM_TABLE: Tuple[HalfSumCase, ...] = (
    # one digit from each input is enough
    _case("L", "L", "L"),
    _case("R", "R", "R"),
    _case("C", "C", "C"),
    _case("L", "R", "C"),
    _case("R", "L", "C"),
    # L with C
    _case("LL", "C", "L", "R"),
    _case("LR", "C", "C", "L"),
    _case("LC", "CL", "L", "R", "C"),
    _case("LC", "CC", "L", "R", "R"),
    _case("LC", "CR", "C", "C", "L"),
    # C with L
    _case("CL", "L", "L", "R"),
    _case("CR", "L", "C", "L"),
    _case("CC", "LL", "L", "R", "C"),
    _case("CC", "LC", "L", "R", "R"),
    _case("CC", "LR", "C", "C", "L"),
    # R with C
    _case("RL", "C", "C", "R"),
    _case("RR", "C", "R", "L"),
    _case("RC", "CL", "C", "R", "C"),
    _case("RC", "CC", "R", "L", "L"),
    _case("RC", "CR", "R", "C", "L"),
    # C with R
    _case("CL", "R", "C", "R"),
    _case("CR", "R", "R", "L"),
    _case("CC", "RL", "C", "R", "C"),
    _case("CC", "RC", "R", "L", "L"),
    _case("CC", "RR", "R", "C", "L"),
)

_BY_DEPTH = {(1, 1): {}, (2, 1): {}, (2, 2): {}}
for _c in HALF_SUM_TABLE:
    _BY_DEPTH[len(_c.xp), len(_c.yp)][_c.xp + _c.yp] = _c
_ONE_ONE, _TWO_ONE, _TWO_TWO = _BY_DEPTH[1, 1], _BY_DEPTH[2, 1], _BY_DEPTH[2, 2]
del _c, _BY_DEPTH


def half_sum(x: Stream, y: Stream) -> Stream:
    """Stream of ``(x + y) / 2``.

    Looks at one digit of each input, then at a second digit of ``x``, then
    at a second digit of ``y``, stopping as soon as a case of
    :data:`HALF_SUM_TABLE` matches.
    """
    def step():
        dx, xt = x.force()
        dy, yt = y.force()
        case = _ONE_ONE.get((dx, dy))
        if case is not None:
            return case.out, half_sum(xt, yt)
        dx2, xt2 = xt.force()
        case = _TWO_ONE.get((dx, dx2, dy))
        if case is not None:
            return case.out, half_sum(cons(case.x_head, xt2), yt)
        dy2, yt2 = yt.force()
        case = _TWO_TWO[dx, dx2, dy, dy2]
        return case.out, half_sum(cons(case.x_head, xt2), cons(case.y_head, yt2))
    return Stream(step)


def mult2(v: Stream) -> Stream:
    """``2v``, meaningful for ``v <= 1/2``; an ``R`` head collapses to one."""
    def step():
        d, t = v.force()
        if d is L:
            return t.force()
        if d is C:
            return R, mult2(t)
        return one().force()
    return Stream(step)


def add(x: Stream, y: Stream) -> Stream:
    """``x + y`` for ``x + y <= 1`` (saturates towards one otherwise)."""
    return mult2(half_sum(x, y))


def one_minus(x: Stream) -> Stream:
    """``1 - x``: swap ``L`` and ``R`` digitwise."""
    def step():
        d, t = x.force()
        return Digit(2 - d), one_minus(t)
    return Stream(step)


def minus_half(x: Stream) -> Stream:
    """``x - 1/2`` for ``x >= 1/2``; an ``L`` head can only mean exactly 1/2."""
    def step():
        d, t = x.force()
        if d is R:
            return L, t
        if d is C:
            return L, minus_half(t)
        return zero().force()
    return Stream(step)


def sub(x: Stream, y: Stream) -> Stream:
    """``x - y`` for ``y <= x``, via ``2 * ((x + (1 - y)) / 2 - 1/2)``."""
    return mult2(minus_half(half_sum(x, one_minus(y))))
