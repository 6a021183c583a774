"""``bishop``: print exact reals to a guaranteed number of decimals.

    bishop eval "<expr>" [--digits D] [--budget B]
    bishop cmp "<e1>" "<e2>" --eps <rat> [--budget B]
    bishop digits e [--digits D]

Exit status is 0 on success, 1 for bad input and 2 when a divisor could not
be shown apart from zero within the search budget.
"""

from __future__ import annotations

import argparse
import contextlib
import sys
from collections.abc import Sequence
from dataclasses import dataclass
from typing import TextIO

from . import real as R
from .expr import ApartnessUnknown, ExprError, eval_expr, parse_expr
from .rat import Rat
from .real import Real, Side

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_UNKNOWN = 2

CMP_TEXT = {Side.LEFT: "LEFT: x < y + eps", Side.RIGHT: "RIGHT: y < x + eps"}


@dataclass(frozen=True)
class RunConfig:
    command: str
    digits: int = 10
    budget: tuple[int, ...] = R.DEFAULT_BUDGET

    def __post_init__(self) -> None:
        if self.digits < 1:
            raise ValueError("digits must be >= 1")
        if not self.budget or list(self.budget) != sorted(set(self.budget)):
            raise ValueError("budget must be a nonempty ascending schedule")


def format_decimal(x: Real, digits: int) -> str:
    """``x`` to ``digits`` decimals with a sound error bound.

    The approximant is within ``10**-d / 2`` of ``x`` and rounding it to
    ``d`` places (half away from zero) adds at most ``10**-d / 2`` more.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    scale = 10**digits
    q = R.approx_eps(x, Rat(1, 2 * scale)) * scale
    a = abs(q)
    rounded = (2 * a.num + a.den) // (2 * a.den)
    whole, frac = divmod(rounded, scale)
    sign = "-" if q.num < 0 and rounded else ""
    return f"{sign}{whole}.{frac:0{digits}d} ± 1e-{digits}"


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _budget_exponent(text: str) -> int:
    v = int(text)
    if not 0 <= v <= 64:
        raise argparse.ArgumentTypeError(f"budget exponent must be in 0..64, got {text}")
    return v


def _positive_rat(text: str) -> Rat:
    try:
        v = Rat.parse(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if v <= 0:
        raise argparse.ArgumentTypeError(f"eps must be positive, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bishop", description="Exact real arithmetic calculator.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--budget", type=_budget_exponent, default=16, metavar="B",
                        help="search witnesses at indices 1, 2, 4, ..., 2**B (default 16)")

    ev = sub.add_parser("eval", help="evaluate an expression")
    ev.add_argument("expr")
    ev.add_argument("--digits", type=_positive_int, default=10, metavar="D")
    common(ev)

    cm = sub.add_parser("cmp", help="decide x < y + eps or y < x + eps")
    cm.add_argument("x")
    cm.add_argument("y")
    cm.add_argument("--eps", type=_positive_rat, required=True)
    common(cm)

    dg = sub.add_parser("digits", help="print a named constant")
    dg.add_argument("name", choices=["e"])
    dg.add_argument("--digits", type=_positive_int, default=10, metavar="D")
    common(dg)
    return p


def run(argv: Sequence[str], stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = build_parser().parse_args(list(argv))
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK

    cfg = RunConfig(args.command, getattr(args, "digits", 10), R.doubling_budget(args.budget))
    try:
        if cfg.command == "eval":
            x = eval_expr(parse_expr(args.expr), cfg.budget)
            print(format_decimal(x, cfg.digits), file=stdout)
        elif cfg.command == "cmp":
            x = eval_expr(parse_expr(args.x), cfg.budget)
            y = eval_expr(parse_expr(args.y), cfg.budget)
            print(CMP_TEXT[R.approx_cmp(x, y, args.eps)], file=stdout)
        else:
            x = eval_expr(parse_expr(args.name), cfg.budget)
            print(format_decimal(x, cfg.digits), file=stdout)
    except ApartnessUnknown as exc:
        print(f"bishop: {exc}", file=stderr)
        return EXIT_UNKNOWN
    except (ExprError, ValueError, ZeroDivisionError) as exc:
        print(f"bishop: {exc}", file=stderr)
        return EXIT_INPUT
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
