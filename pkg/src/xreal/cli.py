"""Command-line front end.

    xreal <command> [operands] --bits N [--digits] [--decimal] [--bounds]

Operands are rationals ``p/q`` in [0, 1] or the constants ``e2`` (e - 2),
``pi4`` (pi/4), ``zero`` and ``one``.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
import threading
from fractions import Fraction

from . import oracle
from .affine import AffineState, axbyc
from .basic_ops import add, half_sum, sub
from .conversions import (cut_of_rational, decimal_render, rat_to_stream,
                          stream_of_cauchy, stream_of_cut)
from .digits import Stream, bounds, digits_to_str, one, take, zero
from .series import mult, number_e_minus2, pi_over_4

CONSTANTS = ("e2", "pi4", "zero", "one")
_RATIONAL = re.compile(r"^\s*(\d+)\s*(?:/\s*(\d+)\s*)?$")
# Enclosures only need to be tight enough to reject clearly bad requests.
_ORACLE_TERMS = 60
_STACK_BYTES = 512 * 1024 * 1024


class UsageError(Exception):
    pass


def parse_operand(text: str):
    """A constant name or a ``Fraction`` in [0, 1]."""
    if text in CONSTANTS:
        return text
    m = _RATIONAL.match(text)
    if not m:
        raise UsageError(f"malformed operand {text!r}: expected p/q or one of {', '.join(CONSTANTS)}")
    p, q = int(m.group(1)), int(m.group(2) or 1)
    if q == 0:
        raise UsageError(f"malformed operand {text!r}: zero denominator")
    value = Fraction(p, q)
    if value > 1:
        raise UsageError(f"operand {text} is outside [0, 1]")
    return value


def operand_stream(op) -> Stream:
    if op == "e2":
        return number_e_minus2()
    if op == "pi4":
        return pi_over_4()
    if op == "zero":
        return zero()
    if op == "one":
        return one()
    return rat_to_stream(op.numerator, op.denominator)


def enclosure(op) -> oracle.CertifiedValue:
    if op == "e2":
        return oracle.oracle_e_minus2(_ORACLE_TERMS)
    if op == "pi4":
        return oracle.oracle_pi_over_4(_ORACLE_TERMS)
    if op == "zero":
        return oracle.point(0)
    if op == "one":
        return oracle.point(1)
    return oracle.point(op)


def _gcd_reduce_enabled() -> bool:
    flag = os.environ.get("XREAL_GCD_REDUCE", "1").strip()
    if flag not in ("0", "1"):
        raise UsageError(f"XREAL_GCD_REDUCE must be 0 or 1, got {flag!r}")
    return flag == "1"


def build_stream(args) -> Stream:
    """Check preconditions against the oracle and build the requested stream."""
    ops = [parse_operand(t) for t in args.operands]
    cmd = args.command
    if cmd == "const":
        if not isinstance(ops[0], str):
            raise UsageError(f"const expects one of {', '.join(CONSTANTS)}")
        return operand_stream(ops[0])
    if cmd == "cut-demo":
        if isinstance(ops[0], str):
            raise UsageError("cut-demo expects a rational operand")
        return stream_of_cut(cut_of_rational(ops[0].numerator, ops[0].denominator))
    if cmd == "cauchy-demo":
        return _cauchy_demo(ops[0])

    x, y = ops
    ex, ey = enclosure(x), enclosure(y)
    if cmd == "add":
        if (ex + ey).lo > 1:
            raise UsageError("add: x + y exceeds 1")
        return add(operand_stream(x), operand_stream(y))
    if cmd == "sub":
        if (ex - ey).hi < 0:
            raise UsageError("sub: x < y")
        return sub(operand_stream(x), operand_stream(y))
    if cmd == "mul":
        return mult(operand_stream(x), operand_stream(y))
    if cmd == "halfsum":
        return half_sum(operand_stream(x), operand_stream(y))
    if cmd == "affine":
        coeffs = (args.a, args.ap, args.b, args.bp, args.c, args.cp)
        if min(args.a, args.b, args.c) < 0 or min(args.ap, args.bp, args.cp) <= 0:
            raise UsageError("affine: need a, b, c >= 0 and a', b', c' > 0")
        value = (ex.scale(Fraction(args.a, args.ap)) + ey.scale(Fraction(args.b, args.bp))
                 ).shift(Fraction(args.c, args.cp))
        if value.lo > 1 or value.hi < 0:
            raise UsageError("affine: value of the form is outside [0, 1]")
        state = AffineState(*coeffs, operand_stream(x), operand_stream(y))
        return axbyc(state, gcd_reduce=_gcd_reduce_enabled())
    raise UsageError(f"unknown command {cmd!r}")


def _cauchy_demo(op) -> Stream:
    if op == "e2":
        # partial sums of 1/k! from k = 2; the tail after m is < 1/(m! m)
        def f(m: int):
            m = max(m, 1)
            num, fk = 0, 1
            for k in range(m, 1, -1):
                num += fk
                fk *= k
            return num, fk
        return stream_of_cauchy(f, lambda n: n + 2)
    if isinstance(op, str):
        raise UsageError("cauchy-demo expects a rational operand or e2")
    return stream_of_cauchy(lambda m: (op.numerator, op.denominator), lambda n: 0)


def decimal_places(bits: int) -> int:
    """``floor(bits * log10(2))``: decimal digits justified by ``bits`` bits."""
    return len(str(1 << bits)) - 1


def run(args) -> str:
    s = build_stream(args)
    lines = [str(bounds(s, args.bits))]
    if args.digits:
        lines.append(digits_to_str(take(s, args.bits)))
    if args.decimal:
        lines.append(decimal_render(s, decimal_places(args.bits)))
    return "".join(line + "\n" for line in lines)


_ARITY = {"const": 1, "cut-demo": 1, "cauchy-demo": 1,
          "add": 2, "sub": 2, "mul": 2, "halfsum": 2, "affine": 2}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="xreal",
        description="Exact real arithmetic on [0,1] with certified dyadic bounds.")
    p.add_argument("command", choices=sorted(_ARITY))
    p.add_argument("operands", nargs="*",
                   help="p/q rationals in [0,1] or constants e2, pi4, zero, one")
    p.add_argument("--bits", type=int, required=True, help="number of digits to force")
    p.add_argument("--digits", action="store_true", help="print the L/C/R digit string")
    p.add_argument("--decimal", action="store_true", help="print a certified decimal rendering")
    p.add_argument("--bounds", action="store_true",
                   help="print the bounds line (always printed)")
    for name, dest, default in (("a", "a", 1), ("b", "b", 0), ("c", "c", 0)):
        p.add_argument(f"--{name}", dest=dest, type=int, default=default)
        p.add_argument(f"--{name}'", f"--{name}p", dest=dest + "p", type=int, default=1)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.bits < 1:
        parser.error("--bits must be at least 1")
    if len(args.operands) != _ARITY[args.command]:
        parser.error(f"{args.command} takes {_ARITY[args.command]} operand(s)")

    result = {}

    def work():
        try:
            result["out"] = run(args)
        except (UsageError, ValueError) as exc:
            result["err"] = str(exc)

    # Deep nesting of lazy cells needs more stack than the main thread has.
    old_size = threading.stack_size(_STACK_BYTES)
    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 400_000))
    try:
        t = threading.Thread(target=work)
        t.start()
        t.join()
    finally:
        threading.stack_size(old_size)
        sys.setrecursionlimit(old_limit)

    if "err" in result:
        print(f"xreal: error: {result['err']}", file=sys.stderr)
        return 2
    sys.stdout.write(result["out"])
    return 0
