"""Real numbers as regular sequences of rationals.

A :class:`Real` is a rule ``n -> x_n`` (``n >= 1``) producing rationals with

    |x_m - x_n| <= 1/m + 1/n            for all m, n >= 1,

so that ``|x - x_n| <= 1/n``.  Every Real here is built by an operation whose
output is provably regular; there is no public way to wrap an arbitrary
sequence except :meth:`Real.unchecked`, which exists for tests.

Order and equality on reals are not decidable.  The predicates below take an
explicit, finite *budget* of indices to inspect and report either a
certificate (a witness or a counterexample) or ``None``, which means only
that nothing was found within the budget.
"""

from __future__ import annotations

import enum
import threading
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass

from .rat import Rat, RatLike, as_rat, rat_max

__all__ = [
    "Real",
    "LtWitness",
    "ApartnessWitness",
    "CanonicalBound",
    "EqCounterexample",
    "Side",
    "IntegrityError",
    "DEFAULT_BUDGET",
    "doubling_budget",
    "from_rat",
    "approx",
    "approx_eps",
    "add",
    "neg",
    "sub",
    "mul",
    "inv",
    "maximum",
    "minimum",
    "absolute",
    "canonical_bound",
    "lt_search",
    "le_refute",
    "eq_refute",
    "approx_cmp",
    "eq_tail_witness",
    "apartness_from_lt",
    "archimedean_bound",
    "archimedean_witness",
    "dense_rational",
]

Budget = Iterable[int]


def doubling_budget(exponent: int) -> tuple[int, ...]:
    """The index schedule ``1, 2, 4, ..., 2**exponent``."""
    if exponent < 0:
        raise ValueError("budget exponent must be >= 0")
    return tuple(1 << i for i in range(exponent + 1))


DEFAULT_BUDGET = doubling_budget(16)


class IntegrityError(RuntimeError):
    """A certificate that should exist by construction was not found."""


_PRIVATE = object()


class Real:
    """A regular sequence of rationals with a per-instance memo table.

    Use :func:`approx` (or :meth:`approx`) to read the sequence.  Each index
    is computed at most once per instance and the stored value is returned on
    every later read, also under concurrent access.
    """

    __slots__ = ("_rule", "_cache", "_lock", "name")

    def __init__(self, rule: Callable[[int], Rat], name: str = "real", *, _key: object = None) -> None:
        if _key is not _PRIVATE:
            raise TypeError("Real values are built with from_rat() and the arithmetic operations")
        self._rule = rule
        self._cache: dict[int, Rat] = {}
        self._lock = threading.Lock()
        self.name = name

    @classmethod
    def unchecked(cls, rule: Callable[[int], Rat], name: str = "unchecked") -> Real:
        """Wrap ``rule`` without any regularity argument.  Test use only."""
        return cls(rule, name, _key=_PRIVATE)

    def approx(self, n: int) -> Rat:
        try:
            return self._cache[n]
        except KeyError:
            pass
        if n < 1:
            raise ValueError(f"sequence index must be >= 1, got {n}")
        q = self._rule(n)
        with self._lock:
            return self._cache.setdefault(n, q)

    def __repr__(self) -> str:
        return f"<Real {self.name}>"

    # Operator sugar.  No comparisons and no ``/``: those need budgets and
    # witnesses, see lt_search() and inv().

    def __add__(self, other: Real | RatLike) -> Real:
        return add(self, _coerce(other))

    def __radd__(self, other: RatLike) -> Real:
        return add(_coerce(other), self)

    def __sub__(self, other: Real | RatLike) -> Real:
        return sub(self, _coerce(other))

    def __rsub__(self, other: RatLike) -> Real:
        return sub(_coerce(other), self)

    def __mul__(self, other: Real | RatLike) -> Real:
        return mul(self, _coerce(other))

    def __rmul__(self, other: RatLike) -> Real:
        return mul(_coerce(other), self)

    def __neg__(self) -> Real:
        return neg(self)

    def __abs__(self) -> Real:
        return absolute(self)


def _make(rule: Callable[[int], Rat], name: str) -> Real:
    return Real(rule, name, _key=_PRIVATE)


def _coerce(value: Real | RatLike) -> Real:
    return value if isinstance(value, Real) else from_rat(as_rat(value))


@dataclass(frozen=True)
class LtWitness:
    """Index ``n`` at which ``y_n - x_n - 1/n = gap > 0`` for a pair ``x < y``."""

    n: int
    gap: Rat


class Side(enum.Enum):
    LEFT = "LEFT"  # x < y + eps
    RIGHT = "RIGHT"  # y < x + eps


@dataclass(frozen=True)
class ApartnessWitness:
    """``|x_m| >= 1/N`` and ``sign(x_m) == sign`` for every ``m >= N``."""

    sign: int
    N: int

    def __post_init__(self) -> None:
        if self.sign not in (-1, 1):
            raise ValueError("sign must be +1 or -1")
        if self.N < 1:
            raise ValueError("N must be >= 1")


@dataclass(frozen=True)
class CanonicalBound:
    K: int


@dataclass(frozen=True)
class EqCounterexample:
    """Index ``n`` with ``|x_n - y_n| - 2/n = excess > 0``."""

    n: int
    excess: Rat


def from_rat(q: RatLike) -> Real:
    q = as_rat(q)
    return _make(lambda n: q, "const")


def approx(x: Real, n: int) -> Rat:
    """``x_n``; within ``1/n`` of ``x``."""
    return x.approx(n)


def approx_eps(x: Real, eps: RatLike) -> Rat:
    """A rational within ``eps`` of ``x``."""
    eps = as_rat(eps)
    if eps <= 0:
        raise ValueError(f"eps must be positive, got {eps}")
    return x.approx(eps.ceil_recip_nat())


def add(x: Real, y: Real) -> Real:
    return _make(lambda n: x.approx(2 * n) + y.approx(2 * n), "add")


def neg(x: Real) -> Real:
    return _make(lambda n: -x.approx(n), "neg")


def sub(x: Real, y: Real) -> Real:
    return add(x, neg(y))


def canonical_bound(x: Real) -> CanonicalBound:
    """An integer ``K`` with ``|x_n| <= K`` for every ``n``.

    Regularity gives ``|x_n| <= |x_1| + 1 + 1/n``, which is at most
    ``|x_1| + 3/2`` once ``n >= 2``.
    """
    a = abs(x.approx(1))
    return CanonicalBound((a + Rat(3, 2)).ceil())


def mul(x: Real, y: Real) -> Real:
    """Product with ``(xy)_n = x_{2Kn} * y_{2Kn}``, ``K`` the larger canonical bound."""
    scale: list[int] = []

    def rule(n: int) -> Rat:
        if not scale:
            scale.append(2 * max(canonical_bound(x).K, canonical_bound(y).K))
        m = scale[0] * n
        return x.approx(m) * y.approx(m)

    return _make(rule, "mul")


def maximum(x: Real, y: Real) -> Real:
    return _make(lambda n: rat_max(x.approx(n), y.approx(n)), "max")


def minimum(x: Real, y: Real) -> Real:
    return neg(maximum(neg(x), neg(y)))


def absolute(x: Real) -> Real:
    return maximum(x, neg(x))


# -- order -------------------------------------------------------------------
#
# The index tests compare raw approximants: ``y_n - x_n > 1/n`` for x < y and
# ``y_n - x_n >= -1/n`` for x <= y.  They certify the real inequality when one
# side is a rational constant, which covers every use inside this package
# (apartness from 0, Archimedean bounds, density, division).


def lt_search(x: Real, y: Real, budget: Budget = DEFAULT_BUDGET) -> LtWitness | None:
    """First index in ``budget`` with ``y_n - x_n > 1/n``, or ``None``."""
    for n in budget:
        gap = y.approx(n) - x.approx(n) - Rat(1, n)
        if gap > 0:
            return LtWitness(n, gap)
    return None


def le_refute(x: Real, y: Real, budget: Budget = DEFAULT_BUDGET) -> LtWitness | None:
    """Look for an index refuting ``x <= y``.

    A hit ``n`` has ``y_n - x_n < -1/n``; it is returned as the LtWitness for
    ``y < x`` it is.  ``None`` means ``x <= y`` held at every inspected index.
    """
    for n in budget:
        gap = x.approx(n) - y.approx(n) - Rat(1, n)
        if gap > 0:
            return LtWitness(n, gap)
    return None


def eq_refute(x: Real, y: Real, budget: Budget = DEFAULT_BUDGET) -> EqCounterexample | None:
    """First index with ``|x_n - y_n| > 2/n``, or ``None``."""
    for n in budget:
        excess = abs(x.approx(n) - y.approx(n)) - Rat(2, n)
        if excess > 0:
            return EqCounterexample(n, excess)
    return None


def approx_cmp(x: Real, y: Real, eps: RatLike) -> Side:
    """Decide one of ``x <= y + eps`` (LEFT) or ``y <= x + eps`` (RIGHT).

    Both may hold; LEFT wins ties.
    """
    eps = as_rat(eps)
    if eps <= 0:
        raise ValueError(f"eps must be positive, got {eps}")
    n = (eps / 4).ceil_recip_nat()
    if x.approx(n) <= y.approx(n) + eps / 2:
        return Side.LEFT
    return Side.RIGHT


def eq_tail_witness(j: int) -> int:
    """For equal reals, ``|x_n - y_n| <= 1/j`` from index ``2j`` on."""
    if j < 1:
        raise ValueError("j must be >= 1")
    return 2 * j


def apartness_from_lt(x: Real, w: LtWitness) -> ApartnessWitness:
    """Turn a witness for ``0 < |x|`` into a uniform tail bound on ``|x_m|``.

    With ``d = |x_n| - 1/n`` and ``N = max(n, ceil(2/d))``, regularity gives
    ``|x_m| >= d - 1/N >= 1/N`` for all ``m >= N``, with the sign of ``x_n``.
    """
    xn = x.approx(w.n)
    gap = abs(xn) - Rat(1, w.n)
    if w.gap <= 0 or gap != w.gap:
        raise ValueError(f"{w} does not witness 0 < |x|")
    N = max(w.n, (gap / 2).ceil_recip_nat())
    return ApartnessWitness(xn.sign(), N)


def inv(x: Real, w: ApartnessWitness) -> Real:
    """``1/x`` given an apartness witness; ``seq(m) = 1 / x_{m N^2}``."""
    step = w.N * w.N

    def rule(m: int) -> Rat:
        a = x.approx(m * step)
        if a.sign() != w.sign or abs(a) * w.N < 1:
            raise IntegrityError(f"apartness witness {w} is invalid at index {m * step}")
        return a.recip()

    return _make(rule, "inv")


def archimedean_bound(x: Real) -> int:
    """An integer ``N > x``, read off the first approximant: ``floor(x_1) + 2``.

    ``N`` may be negative; callers needing a natural number clamp at 1.
    """
    return x.approx(1).floor() + 2


def archimedean_witness(x: Real, budget: Sequence[int] = (2, 4, 8)) -> tuple[int, LtWitness]:
    """``archimedean_bound(x)`` together with an LtWitness for ``x < N``.

    ``N - x >= floor(x_1) + 1 - x_1 > 0``, so an index past twice the inverse
    of that margin always works; it is tried after ``budget``.
    """
    x1 = x.approx(1)
    N = x1.floor() + 2
    margin = x1.floor() + 1 - x1
    fallback = (margin / 2).ceil_recip_nat() + 1
    w = lt_search(x, from_rat(N), [*budget, fallback])
    if w is None:
        raise IntegrityError(f"no witness for x < {N}")
    return N, w


def _search_schedule(limit: int) -> list[int]:
    sched = [1 << i for i in range(limit.bit_length()) if (1 << i) < limit]
    return [*sched, limit]


def dense_rational(x: Real, y: Real, w: LtWitness) -> tuple[Rat, LtWitness, LtWitness]:
    """A rational strictly between ``x`` and ``y``, with both witnesses."""
    if w.gap <= 0:
        raise ValueError(f"{w} is not a witness")
    N = max(w.n, (8 / w.gap).ceil())
    q = (x.approx(N) + y.approx(N)) / 2
    schedule = _search_schedule((16 / w.gap).ceil())
    cq = from_rat(q)
    wx = lt_search(x, cq, schedule)
    wy = lt_search(cq, y, schedule)
    if wx is None or wy is None:
        raise IntegrityError(f"density witnesses not found below index {schedule[-1]}")
    return q, wx, wy
