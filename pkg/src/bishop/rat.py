"""Exact rational arithmetic over Python integers.

Fractions are kept *unnormalized*: results of ``+`` and ``*`` are formed by
cross multiplication and are not reduced to lowest terms.  Reduction costs a
gcd per operation, which dominates in deep real-number expressions, so it is
only applied when an operand grows past :attr:`Rat.reduce_bits` bits, or
explicitly through :meth:`Rat.reduce`.

Denominators are always positive; the sign lives in the numerator.
"""

from __future__ import annotations

import enum
import math
import operator
import re
from fractions import Fraction
from typing import Union

__all__ = ["Rat", "Ordering", "RatLike", "as_rat", "rat_max", "rat_min"]


class Ordering(enum.Enum):
    LT = -1
    EQ = 0
    GT = 1


RatLike = Union["Rat", int]


class Rat:
    """A rational number ``num/den`` with ``den > 0``, not necessarily reduced.

    Two Rats are equal when ``a.num * b.den == b.num * a.den``; ``Rat(2, 4)``
    and ``Rat(1, 2)`` compare and hash equal but keep their own
    representations.  Instances are immutable.
    """

    __slots__ = ("num", "den")

    #: operands whose numerator or denominator exceeds this many bits are
    #: reduced after an arithmetic operation; set to ``None`` to never reduce.
    reduce_bits: int | None = 4096

    def __init__(self, num: int = 0, den: int = 1) -> None:
        num = operator.index(num)
        den = operator.index(den)
        if den == 0:
            raise ZeroDivisionError(f"Rat({num}, 0): zero denominator")
        if den < 0:
            num, den = -num, -den
        self.num = num
        self.den = den

    @classmethod
    def _raw(cls, num: int, den: int) -> Rat:
        # den > 0 is the caller's responsibility
        limit = cls.reduce_bits
        if limit is not None and (den.bit_length() > limit or num.bit_length() > limit):
            g = math.gcd(num, den)
            if g > 1:
                num //= g
                den //= g
        self = object.__new__(cls)
        self.num = num
        self.den = den
        return self

    # -- text --------------------------------------------------------------

    _LITERAL = re.compile(
        r"\s*(?P<sign>[+-]?)(?:(?P<p>\d+)/(?P<q>\d+)|(?P<ip>\d*)\.(?P<fp>\d+)|(?P<ip2>\d+)\.?)\s*"
    )

    @classmethod
    def parse(cls, text: str) -> Rat:
        """Parse ``"p/q"``, an integer, or a decimal ``"d.ddd"`` exactly.

        >>> Rat.parse("-0.125")
        Rat(-125, 1000)
        >>> Rat.parse("6/4")
        Rat(6, 4)
        """
        m = cls._LITERAL.fullmatch(text)
        if m is None:
            raise ValueError(f"not a rational literal: {text!r}")
        sign = -1 if m["sign"] == "-" else 1
        if m["p"] is not None:
            return cls(sign * int(m["p"]), int(m["q"]))
        if m["fp"] is not None:
            digits = len(m["fp"])
            return cls(sign * int((m["ip"] or "0") + m["fp"]), 10**digits)
        return cls(sign * int(m["ip2"]))

    def __str__(self) -> str:
        r = self.reduce()
        return f"{r.num}/{r.den}"

    def __repr__(self) -> str:
        return f"Rat({self.num}, {self.den})"

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: RatLike) -> Rat:
        if isinstance(other, Rat):
            return Rat._raw(self.num * other.den + other.num * self.den, self.den * other.den)
        if isinstance(other, int):
            return Rat._raw(self.num + other * self.den, self.den)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: RatLike) -> Rat:
        if isinstance(other, Rat):
            return Rat._raw(self.num * other.den - other.num * self.den, self.den * other.den)
        if isinstance(other, int):
            return Rat._raw(self.num - other * self.den, self.den)
        return NotImplemented

    def __rsub__(self, other: RatLike) -> Rat:
        if isinstance(other, int):
            return Rat._raw(other * self.den - self.num, self.den)
        return NotImplemented

    def __mul__(self, other: RatLike) -> Rat:
        if isinstance(other, Rat):
            return Rat._raw(self.num * other.num, self.den * other.den)
        if isinstance(other, int):
            return Rat._raw(self.num * other, self.den)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: RatLike) -> Rat:
        return self * as_rat(other).recip()

    def __rtruediv__(self, other: RatLike) -> Rat:
        return as_rat(other) * self.recip()

    def recip(self) -> Rat:
        if self.num == 0:
            raise ZeroDivisionError("reciprocal of zero")
        if self.num < 0:
            return Rat._raw(-self.den, -self.num)
        return Rat._raw(self.den, self.num)

    def __neg__(self) -> Rat:
        return Rat._raw(-self.num, self.den)

    def __pos__(self) -> Rat:
        return self

    def __abs__(self) -> Rat:
        return self if self.num >= 0 else Rat._raw(-self.num, self.den)

    def __pow__(self, k: int) -> Rat:
        k = operator.index(k)
        if k < 0:
            return self.recip() ** -k
        return Rat._raw(self.num**k, self.den**k)

    # -- order -------------------------------------------------------------

    def cmp(self, other: RatLike) -> Ordering:
        other = as_rat(other)
        lhs = self.num * other.den
        rhs = other.num * self.den
        if lhs < rhs:
            return Ordering.LT
        if lhs > rhs:
            return Ordering.GT
        return Ordering.EQ

    def _cross(self, other):
        if isinstance(other, Rat):
            return self.num * other.den, other.num * self.den
        if isinstance(other, int):
            return self.num, other * self.den
        return None

    def __eq__(self, other: object) -> bool:
        c = self._cross(other)
        return NotImplemented if c is None else c[0] == c[1]

    def __lt__(self, other: RatLike) -> bool:
        c = self._cross(other)
        return NotImplemented if c is None else c[0] < c[1]

    def __le__(self, other: RatLike) -> bool:
        c = self._cross(other)
        return NotImplemented if c is None else c[0] <= c[1]

    def __gt__(self, other: RatLike) -> bool:
        c = self._cross(other)
        return NotImplemented if c is None else c[0] > c[1]

    def __ge__(self, other: RatLike) -> bool:
        c = self._cross(other)
        return NotImplemented if c is None else c[0] >= c[1]

    def __hash__(self) -> int:
        # agree with int and Fraction hashing so mixed keys behave
        return hash(Fraction(self.num, self.den))

    def __bool__(self) -> bool:
        return self.num != 0

    def sign(self) -> int:
        return (self.num > 0) - (self.num < 0)

    # -- integer parts -----------------------------------------------------

    def floor(self) -> int:
        return self.num // self.den

    def ceil(self) -> int:
        return -(-self.num // self.den)

    def ceil_recip_nat(self) -> int:
        """Least positive ``n`` with ``1/n <= self``.

        >>> Rat(2, 7).ceil_recip_nat()
        4
        """
        if self.num <= 0:
            raise ValueError(f"ceil_recip_nat needs a positive argument, got {self}")
        return max(1, -(-self.den // self.num))

    def reduce(self) -> Rat:
        """Return the same value in lowest terms."""
        g = math.gcd(self.num, self.den)
        r = object.__new__(Rat)
        r.num = self.num // g
        r.den = self.den // g
        return r

    def same_repr(self, other: Rat) -> bool:
        """True when both numerator and denominator match literally."""
        return self.num == other.num and self.den == other.den


def as_rat(value: RatLike) -> Rat:
    if isinstance(value, Rat):
        return value
    if isinstance(value, int):
        return Rat(value)
    raise TypeError(f"expected Rat or int, got {type(value).__name__}")


def rat_max(a: Rat, b: Rat) -> Rat:
    return b if a < b else a


def rat_min(a: Rat, b: Rat) -> Rat:
    return b if b < a else a

