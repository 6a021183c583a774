import io
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bishop import real as R
from bishop.cli import RunConfig, format_decimal, run
from bishop.expr import (
    ApartnessUnknown,
    Const,
    Num,
    Op,
    ParseError,
    UnsupportedArgument,
    eval_expr,
    parse_expr,
    tokenize,
    unparse,
)
from bishop.rat import Rat

from helpers import BUDGET_100, JITTERS


def num(p, q=1):
    return Num(Rat(p, q))


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


# -- parsing ---------------------------------------------------------------------


def test_parse_examples():
    assert parse_expr("1/3 + 1/6") == Op("add", (num(1, 3), num(1, 6)))
    assert parse_expr("abs(-3/4)") == Op("abs", (Op("neg", (num(3, 4),)),))
    assert parse_expr("(1 + 2) / 4") == Op("div", (Op("add", (num(1), num(2))), num(4)))


@pytest.mark.parametrize(
    "text, kinds",
    [("1/3", ["rat"]), ("1 / 3", ["int", "op", "int"]), ("1/ 3", ["int", "op", "int"]),
     ("0.25", ["dec"]), ("2/3.5", ["int", "op", "dec"]), ("1/3/2", ["rat", "op", "int"])],
)
def test_rational_literal_lexing(text, kinds):
    assert [t.kind for t in tokenize(text)][:-1] == kinds


def test_precedence():
    assert parse_expr("1 + 2 * 3") == Op("add", (num(1), Op("mul", (num(2), num(3)))))
    assert parse_expr("-2 * 3") == Op("mul", (Op("neg", (num(2),)), num(3)))
    assert parse_expr("1 - 2 - 3") == Op("sub", (Op("sub", (num(1), num(2))), num(3)))
    assert parse_expr("max(1, e) / inv(2)") == Op(
        "div", (Op("max", (num(1), Const("e"))), Op("inv", (num(2),)))
    )


def test_decimal_literal_is_exact():
    e = parse_expr("0.1")
    assert e.value.same_repr(Rat(1, 10))


@pytest.mark.parametrize("text, pos", [("1 +", 3), ("(1", 2), ("1 $ 2", 2), ("foo(1)", 0), ("max(1)", 0), ("1 2", 2)])
def test_syntax_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_expr(text)
    assert info.value.pos == pos


def test_exp_needs_literal():
    assert parse_expr("exp(-1/2)") == Op("exp", (Op("neg", (num(1, 2),)),))
    with pytest.raises(UnsupportedArgument):
        parse_expr("exp(e)")
    with pytest.raises(UnsupportedArgument):
        parse_expr("exp(1 + 1)")


@pytest.mark.parametrize("text", ["1/3 + 1/6", "abs(-3/4)", "(1 + 2) / 4", "-(1 - e) * max(2, exp(0.5))", "1/(1/3)"])
def test_unparse_round_trip(text):
    e = parse_expr(text)
    assert parse_expr(unparse(e)) == e


# -- evaluation -----------------------------------------------------------------


def test_eval_examples():
    assert R.eq_refute(eval_expr(parse_expr("0 - 0")), R.from_rat(0), BUDGET_100) is None
    assert R.eq_refute(eval_expr(parse_expr("1/(1/3)")), R.from_rat(3), BUDGET_100) is None
    with pytest.raises(ApartnessUnknown) as info:
        eval_expr(parse_expr("1/(0/1)"))
    assert info.value.subexpr == "0/1"


def test_eval_functions():
    x = eval_expr(parse_expr("max(1/3, min(1/2, 2)) - abs(-1/6) + inv(4) * 4"))
    assert R.eq_refute(x, R.from_rat(Rat(4, 3)), BUDGET_100) is None
    y = eval_expr(parse_expr("exp(1) - e"))
    assert R.eq_refute(y, R.from_rat(0), range(1, 30)) is None


def test_eval_budget_limits_division():
    e = parse_expr("1 / (1/1000)")
    with pytest.raises(ApartnessUnknown):
        eval_expr(e, R.doubling_budget(8))
    x = eval_expr(e, R.doubling_budget(12))
    assert R.eq_refute(x, R.from_rat(1000), BUDGET_100) is None


def test_node_budget_overrides_default():
    e = Op("div", (num(1), num(1, 1000)), budget=(4096,))
    x = eval_expr(e, (1,))
    assert R.eq_refute(x, R.from_rat(1000), BUDGET_100) is None


# -- formatting ------------------------------------------------------------------


@pytest.mark.parametrize(
    "q, d, text",
    [(Rat(1, 2), 10, "0.5000000000 ± 1e-10"), (Rat(-1, 3), 5, "-0.33333 ± 1e-5"), (Rat(0), 3, "0.000 ± 1e-3"),
     (Rat(2, 3), 3, "0.667 ± 1e-3"), (Rat(-5, 2), 1, "-2.5 ± 1e-1"), (Rat(-1, 10**6), 3, "0.000 ± 1e-3")],
)
def test_format_decimal(q, d, text):
    assert format_decimal(R.from_rat(q), d) == text


@given(st.integers(-10**6, 10**6), st.integers(1, 10**4), st.integers(1, 12), st.sampled_from(sorted(JITTERS)))
def test_format_decimal_bound_is_sound(p, q, d, kind):
    value = Rat(p, q)
    text = format_decimal(JITTERS[kind](value), d)
    printed, bound = text.split(" ± ")
    assert bound == f"1e-{d}"
    assert len(printed.split(".")[1]) == d
    assert abs(Rat.parse(printed) - value) <= Rat(1, 10**d)


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig("eval", digits=0)
    with pytest.raises(ValueError):
        RunConfig("eval", budget=())
    with pytest.raises(ValueError):
        RunConfig("eval", budget=(4, 2))


# -- command line ------------------------------------------------------------------


def test_run_eval():
    assert invoke("eval", "1/3 + 1/6", "--digits", "10") == (0, "0.5000000000 ± 1e-10\n", "")


def test_run_cmp():
    assert invoke("cmp", "1/3", "1/2", "--eps", "1/100") == (0, "LEFT: x < y + eps\n", "")
    assert invoke("cmp", "1/2", "1/3", "--eps", "1/100") == (0, "RIGHT: y < x + eps\n", "")


def test_run_digits():
    code, out, _ = invoke("digits", "e", "--digits", "30")
    assert (code, out) == (0, "2.718281828459045235360287471353 ± 1e-30\n")


def test_run_apartness_unknown():
    code, out, err = invoke("eval", "1/(0/1)")
    assert code == 2
    assert out == ""
    assert "cannot verify divisor apart from zero: 0/1" in err


@pytest.mark.parametrize(
    "argv",
    [["eval"], ["eval", "1", "--digits", "0"], ["eval", "1", "--frobnicate"], ["cmp", "1", "2"],
     ["cmp", "1", "2", "--eps", "0"], ["cmp", "1", "2", "--eps", "x"], ["digits", "pi"], ["eval", "1 +"],
     ["eval", "exp(5)"], ["launch"], []],
)
def test_run_input_errors(argv):
    code, out, err = invoke(*argv)
    assert code == 1
    assert out == ""
    assert err


def test_budget_flag():
    assert invoke("eval", "1/(1/1000)", "--budget", "8")[0] == 2
    assert invoke("eval", "1/(1/1000)", "--budget", "12", "--digits", "2") == (0, "1000.00 ± 1e-2\n", "")


def test_negative_literal_after_double_dash():
    assert invoke("eval", "--digits", "5", "--", "-1/3") == (0, "-0.33333 ± 1e-5\n", "")


def test_output_is_deterministic():
    argv = ["eval", "e * exp(-1/2) - 1/(1/3 - 1/7)", "--digits", "25"]
    assert invoke(*argv) == invoke(*argv)


def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "bishop.cli", "eval", "1/3 + 1/6", "--digits", "10"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == "0.5000000000 ± 1e-10\n"
