import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from xreal import oracle
from xreal.basic_ops import add, half_sum, minus_half, mult2, one_minus, sub
from xreal.conversions import (cut_of_rational, rat_to_stream, stream_of_cauchy,
                               stream_of_cut)
from xreal.digits import Digit, bounds, from_prefix, one, zero

ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(ACCEPTANCE_RESULTS[key])


def unit_fractions(max_denominator=10_000):
    """Hypothesis strategy for rationals in [0, 1]."""
    return st.integers(1, max_denominator).flatmap(
        lambda q: st.integers(0, q).map(lambda p: Fraction(p, q)))


def stream_of(v: Fraction):
    return rat_to_stream(v.numerator, v.denominator)


def contains(s, v, n=40) -> bool:
    """Oracle check that ``bounds(s, n)`` holds the exact value ``v``."""
    return oracle.check_contains(bounds(s, n), oracle.point(v))


def random_fraction(rnd: random.Random, max_den=1000, lo=Fraction(0), hi=Fraction(1)):
    q = rnd.randint(1, max_den)
    p_lo = -(-lo.numerator * q // lo.denominator)
    p_hi = hi.numerator * q // hi.denominator
    return Fraction(rnd.randint(p_lo, p_hi), q)


def random_stream(rnd: random.Random):
    """A stream from one of the library's constructions, plus its exact value
    when the construction makes that easy (else None)."""
    kind = rnd.randrange(7)
    v = random_fraction(rnd)
    if kind == 0:
        return stream_of(v), v
    if kind == 1:
        return stream_of_cut(cut_of_rational(v.numerator, v.denominator)), v
    if kind == 2:
        return stream_of_cauchy(lambda m: (v.numerator, v.denominator), lambda n: 0), v
    w = random_fraction(rnd)
    if kind == 3:
        return half_sum(stream_of(v), stream_of(w)), (v + w) / 2
    if kind == 4:
        hi, lo = max(v, w), min(v, w)
        return sub(stream_of(hi), stream_of(lo)), hi - lo
    if kind == 5:
        return one_minus(stream_of(v)), 1 - v
    digits = [Digit(rnd.randrange(3)) for _ in range(rnd.randrange(1, 12))]
    tail = rnd.choice([zero(), one(), stream_of(w)])
    return from_prefix(digits, tail), None


@pytest.fixture
def rnd():
    return random.Random(20240917)
