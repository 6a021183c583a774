"""Arithmetic expressions over exact reals: lexer, parser and evaluator.

Grammar, loosest binding first::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := ('-' | '+') unary | primary
    primary := NUMBER | 'e' | NAME '(' expr (',' expr)* ')' | '(' expr ')'

``p/q`` written with no spaces between two digit runs is a single rational
literal; anywhere else ``/`` is real division, which needs a witness that
the divisor is apart from zero.
"""

from __future__ import annotations

import re
from collections.abc import Sequence
from dataclasses import dataclass, field

from . import real as R
from .rat import Rat
from .real import DEFAULT_BUDGET, Real
from .seq import exp_rational

__all__ = [
    "Expr",
    "Num",
    "Const",
    "Op",
    "ExprError",
    "ParseError",
    "UnsupportedArgument",
    "ApartnessUnknown",
    "parse_expr",
    "eval_expr",
    "unparse",
    "divide",
]


class ExprError(ValueError):
    pass


class ParseError(ExprError):
    def __init__(self, message: str, pos: int) -> None:
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class UnsupportedArgument(ParseError):
    pass


class ApartnessUnknown(Exception):
    """No witness that a divisor is apart from zero was found within budget.

    This does not claim the divisor is zero.
    """

    def __init__(self, subexpr: str, budget: Sequence[int]) -> None:
        super().__init__(
            f"cannot verify divisor apart from zero: {subexpr} "
            f"(searched indices up to {max(budget)})"
        )
        self.subexpr = subexpr
        self.budget = tuple(budget)


@dataclass(frozen=True)
class Num:
    value: Rat
    text: str = field(default="", compare=False)


@dataclass(frozen=True)
class Const:
    name: str


@dataclass(frozen=True)
class Op:
    name: str
    args: tuple[Expr, ...]
    # index schedule for the apartness search of div/inv; None means the
    # evaluator's default
    budget: tuple[int, ...] | None = field(default=None, compare=False, repr=False)


Expr = Num | Const | Op

CONSTANTS = {"e"}
FUNCTIONS = {"abs": 1, "max": 2, "min": 2, "inv": 1, "exp": 1}

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<rat>\d+/\d+(?![\d.]))
  | (?P<dec>\d*\.\d+|\d+\.(?!\d))
  | (?P<int>\d+)
  | (?P<name>[A-Za-z_]\w*)
  | (?P<op>[-+*/(),])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            toks.append(_Tok(m.lastgroup, m.group(), pos))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str) -> None:
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> _Tok:
        if self.tok.text != text:
            found = self.tok.text or "end of input"
            raise ParseError(f"expected {text!r}, found {found!r}", self.tok.pos)
        return self.take()

    def parse(self) -> Expr:
        e = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return e

    def expr(self) -> Expr:
        e = self.term()
        while self.tok.text in ("+", "-"):
            op = "add" if self.take().text == "+" else "sub"
            e = Op(op, (e, self.term()))
        return e

    def term(self) -> Expr:
        e = self.unary()
        while self.tok.text in ("*", "/"):
            op = "mul" if self.take().text == "*" else "div"
            e = Op(op, (e, self.unary()))
        return e

    def unary(self) -> Expr:
        if self.tok.text == "-":
            self.take()
            return Op("neg", (self.unary(),))
        if self.tok.text == "+":
            self.take()
            return self.unary()
        return self.primary()

    def primary(self) -> Expr:
        t = self.tok
        if t.kind in ("rat", "dec", "int"):
            self.take()
            return Num(Rat.parse(t.text), t.text)
        if t.text == "(":
            self.take()
            e = self.expr()
            self.expect(")")
            return e
        if t.kind == "name":
            self.take()
            if t.text in CONSTANTS:
                return Const(t.text)
            if t.text not in FUNCTIONS:
                raise ParseError(f"unknown name {t.text!r}", t.pos)
            return self.call(t)
        found = t.text or "end of input"
        raise ParseError(f"unexpected {found!r}", t.pos)

    def call(self, name: _Tok) -> Expr:
        self.expect("(")
        arg_pos = self.tok.pos
        args = [self.expr()]
        while self.tok.text == ",":
            self.take()
            args.append(self.expr())
        self.expect(")")
        arity = FUNCTIONS[name.text]
        if len(args) != arity:
            raise ParseError(f"{name.text} takes {arity} argument(s), got {len(args)}", name.pos)
        if name.text == "exp" and _literal_value(args[0]) is None:
            raise UnsupportedArgument("exp needs a rational or decimal literal argument", arg_pos)
        return Op(name.text, tuple(args))


def _literal_value(e: Expr) -> Rat | None:
    if isinstance(e, Num):
        return e.value
    if isinstance(e, Op) and e.name == "neg":
        v = _literal_value(e.args[0])
        return None if v is None else -v
    return None


def parse_expr(text: str) -> Expr:
    """Parse ``text`` into an expression tree.

    >>> parse_expr("abs(-3/4)")
    Op(name='abs', args=(Op(name='neg', args=(Num(value=Rat(3, 4), text='3/4'),)),))
    """
    return _Parser(text).parse()


_INFIX = {"add": "+", "sub": "-", "mul": "*", "div": "/"}


def unparse(e: Expr) -> str:
    """Render ``e`` back to source text, fully parenthesised where needed."""
    if isinstance(e, Num):
        return e.text or str(e.value)
    if isinstance(e, Const):
        return e.name
    if e.name in _INFIX:
        parts = [_wrap(a) for a in e.args]
        return f" {_INFIX[e.name]} ".join(parts)
    if e.name == "neg":
        return f"-{_wrap(e.args[0])}"
    return f"{e.name}({', '.join(unparse(a) for a in e.args)})"


def _wrap(e: Expr) -> str:
    s = unparse(e)
    return f"({s})" if isinstance(e, Op) and e.name in _INFIX else s


def divide(x: Real, y: Real, budget: Sequence[int] = DEFAULT_BUDGET, label: str = "divisor") -> Real:
    """``x / y`` once ``0 < |y|`` is witnessed within ``budget``."""
    return R.mul(x, _reciprocal(y, budget, label))


def _reciprocal(y: Real, budget: Sequence[int], label: str) -> Real:
    w = R.lt_search(R.from_rat(0), R.absolute(y), budget)
    if w is None:
        raise ApartnessUnknown(label, budget)
    return R.inv(y, R.apartness_from_lt(y, w))


def eval_expr(e: Expr, budget: Sequence[int] = DEFAULT_BUDGET) -> Real:
    """Build the Real denoted by ``e``.

    Divisions search ``budget`` (or the node's own) for an apartness witness
    right away, so an unverifiable divisor fails here, not during printing.
    """
    consts: dict[str, Real] = {}

    def ev(e: Expr) -> Real:
        if isinstance(e, Num):
            return R.from_rat(e.value)
        if isinstance(e, Const):
            if e.name not in consts:
                consts[e.name] = exp_rational(1)
            return consts[e.name]
        name, args = e.name, e.args
        if name == "exp":
            return exp_rational(_literal_value(args[0]))
        vals = [ev(a) for a in args]
        b = e.budget or budget
        if name == "add":
            return R.add(*vals)
        if name == "sub":
            return R.sub(*vals)
        if name == "mul":
            return R.mul(*vals)
        if name == "div":
            return divide(vals[0], vals[1], b, unparse(args[1]))
        if name == "inv":
            return _reciprocal(vals[0], b, unparse(args[0]))
        if name == "neg":
            return R.neg(vals[0])
        if name == "abs":
            return R.absolute(vals[0])
        if name == "max":
            return R.maximum(*vals)
        if name == "min":
            return R.minimum(*vals)
        raise ExprError(f"unknown operation {name!r}")

    return ev(e)
