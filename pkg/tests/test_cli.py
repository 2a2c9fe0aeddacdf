import subprocess
import sys
from fractions import Fraction

import pytest

from xreal import oracle
from xreal.cli import decimal_places, main, parse_operand, UsageError


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.splitlines(), err


def _bounds_of(line):
    lo, _, hi = line.partition(" <= value <= ")
    lo_num, k = lo.split("/2^")
    hi_num, k2 = hi.split("/2^")
    assert k == k2
    return Fraction(int(lo_num), 2 ** int(k)), Fraction(int(hi_num), 2 ** int(k))


def test_const_e2_golden(capsys):
    code, lines, _ = run_cli(capsys, "const", "e2", "--bits", "10", "--digits", "--decimal")
    assert code == 0
    assert lines == ["1470/2^11 <= value <= 1472/2^11", "RLRRCCCCLR", "0.718"]


def test_add_golden(capsys):
    code, lines, _ = run_cli(capsys, "add", "1/3", "1/6", "--bits", "20")
    assert code == 0
    assert lines == ["1048575/2^21 <= value <= 1048577/2^21"]


def test_zero_digits(capsys):
    assert run_cli(capsys, "const", "zero", "--bits", "4", "--digits")[1][1] == "LLLL"


@pytest.mark.parametrize("argv, value", [
    (["halfsum", "1/3", "1/6"], Fraction(1, 4)),
    (["sub", "3/4", "1/3"], Fraction(5, 12)),
    (["mul", "1/2", "1/3"], Fraction(1, 6)),
    (["affine", "one", "zero", "--a", "1", "--a'", "3", "--c", "1", "--c'", "6"], Fraction(1, 2)),
    (["affine", "1/2", "1/4", "--a", "1", "--ap", "2", "--b", "1", "--bp", "1"], Fraction(1, 2)),
    (["cut-demo", "2/7"], Fraction(2, 7)),
    (["cauchy-demo", "3/5"], Fraction(3, 5)),
])
def test_commands_bracket_their_value(capsys, argv, value):
    code, lines, _ = run_cli(capsys, *argv, "--bits", "24", "--bounds")
    assert code == 0
    lo, hi = _bounds_of(lines[0])
    assert lo <= value <= hi and hi - lo == Fraction(1, 2 ** 24)


def test_constants_against_oracle(capsys):
    for name, enc in (("e2", oracle.oracle_e_minus2(40)), ("pi4", oracle.oracle_pi_over_4(60))):
        _, lines, _ = run_cli(capsys, "const", name, "--bits", "64")
        lo, hi = _bounds_of(lines[0])
        assert enc.lo <= hi and lo <= enc.hi
    _, lines, _ = run_cli(capsys, "cauchy-demo", "e2", "--bits", "40")
    lo, hi = _bounds_of(lines[0])
    enc = oracle.oracle_e_minus2(40)
    assert enc.lo <= hi and lo <= enc.hi


def test_output_is_deterministic(capsys):
    argv = ["mul", "e2", "pi4", "--bits", "30", "--digits", "--decimal"]
    assert run_cli(capsys, *argv)[1] == run_cli(capsys, *argv)[1]


@pytest.mark.parametrize("argv", [
    ["sub", "1/3", "1/2", "--bits", "8"],
    ["add", "e2", "pi4", "--bits", "8"],
    ["add", "2/3", "2/3", "--bits", "8"],
    ["const", "3/2", "--bits", "8"],
    ["const", "x", "--bits", "8"],
    ["const", "1/0", "--bits", "8"],
    ["affine", "1/2", "1/2", "--a", "-1", "--bits", "8"],
    ["affine", "one", "one", "--a", "1", "--b", "1", "--bits", "8"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, lines, err = run_cli(capsys, *argv)
    assert code == 2 and lines == []
    assert err.startswith("xreal: error:")


@pytest.mark.parametrize("argv", [
    ["const", "e2", "--bits", "0"],
    ["add", "1/2", "--bits", "4"],
    ["frobnicate", "1/2", "--bits", "4"],
    ["const", "e2"],
])
def test_argument_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_gcd_flag(capsys, monkeypatch):
    argv = ["affine", "1/3", "2/5", "--a", "2", "--ap", "6", "--b", "3", "--bp", "9",
            "--bits", "40", "--digits"]
    monkeypatch.setenv("XREAL_GCD_REDUCE", "0")
    off = run_cli(capsys, *argv)
    monkeypatch.setenv("XREAL_GCD_REDUCE", "1")
    on = run_cli(capsys, *argv)
    assert off[0] == on[0] == 0
    assert _bounds_of(on[1][0])[0] <= Fraction(1, 3) * Fraction(1, 3) + Fraction(1, 3) * Fraction(2, 5)
    monkeypatch.setenv("XREAL_GCD_REDUCE", "maybe")
    assert run_cli(capsys, *argv)[0] == 2


def test_parse_operand():
    assert parse_operand("1/3") == Fraction(1, 3)
    assert parse_operand(" 0 ") == 0
    with pytest.raises(UsageError):
        parse_operand("4/3")


@pytest.mark.parametrize("bits, places", [(1, 0), (4, 1), (10, 3), (64, 19)])
def test_decimal_places(bits, places):
    assert decimal_places(bits) == places


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "xreal", "const", "one", "--bits", "3", "--digits"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == "14/2^4 <= value <= 16/2^4\nRRR\n"
