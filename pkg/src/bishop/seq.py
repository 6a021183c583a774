"""Sequences and series of reals, always paired with explicit moduli.

A sequence of reals is only useful here together with a modulus: a rule
``k -> N(k)`` saying how far out the sequence is within ``1/k`` of itself
(:class:`CauchyModulus`) or of its limit (:class:`ConvergenceModulus`).
Moduli are the caller's obligation.  They are not checked at runtime;
the test suite refutes bad ones by sampling.
"""

from __future__ import annotations

import threading
from collections.abc import Callable, Sequence
from dataclasses import dataclass

from . import real as R
from .rat import Rat, RatLike, as_rat
from .real import ApartnessWitness, Real

__all__ = [
    "RealSeq",
    "CauchyModulus",
    "ConvergenceModulus",
    "SeriesTerms",
    "limit",
    "cauchy_from_convergent",
    "seq_add",
    "partial_sums",
    "series_partial_sums",
    "series_limit",
    "ratio_test_modulus",
    "comparison_test_modulus",
    "exp_rational",
    "Diagonal",
    "cantor_diagonal",
]

SeriesTerms = Callable[[int], Real]


class RealSeq:
    """A sequence ``n -> x_n`` of reals, ``n >= 1``, memoized per index."""

    def __init__(self, term: Callable[[int], Real]) -> None:
        self._term = term
        self._cache: dict[int, Real] = {}
        self._lock = threading.Lock()

    def term(self, n: int) -> Real:
        try:
            return self._cache[n]
        except KeyError:
            pass
        if n < 1:
            raise ValueError(f"sequence index must be >= 1, got {n}")
        x = self._term(n)
        with self._lock:
            return self._cache.setdefault(n, x)

    __getitem__ = term


@dataclass(frozen=True)
class _Modulus:
    fn: Callable[[int], int]

    def __call__(self, k: int) -> int:
        if k < 1:
            raise ValueError(f"modulus argument must be >= 1, got {k}")
        n = self.fn(k)
        if n < 1:
            raise ValueError(f"modulus returned {n} at k={k}")
        return n


class CauchyModulus(_Modulus):
    """``|x_m - x_n| <= 1/k`` whenever ``m, n >= N(k)``."""


class ConvergenceModulus(_Modulus):
    """``|x_n - l| <= 1/k`` whenever ``n >= M(k)``."""


def limit(xs: RealSeq, N: CauchyModulus) -> tuple[Real, ConvergenceModulus]:
    """The limit of a Cauchy sequence and its rate of convergence.

    ``l_k`` is the ``2k``-th approximant of ``x_{M(k)}`` with
    ``M(k) = max(3k, N(2k))``; ``M`` is also the convergence modulus.
    """

    def M(k: int) -> int:
        return max(3 * k, N(2 * k))

    lim = R._make(lambda k: xs.term(M(k)).approx(2 * k), "limit")
    return lim, ConvergenceModulus(M)


def cauchy_from_convergent(M: ConvergenceModulus) -> CauchyModulus:
    """A convergent sequence is Cauchy with ``N(k) = M(2k)``."""
    return CauchyModulus(lambda k: M(2 * k))


def seq_add(
    xs: RealSeq, nx: CauchyModulus, ys: RealSeq, ny: CauchyModulus
) -> tuple[RealSeq, CauchyModulus]:
    """Termwise sum, Cauchy with ``N(k) = max(N_x(2k), N_y(2k))``."""
    total = RealSeq(lambda n: R.add(xs.term(n), ys.term(n)))
    return total, CauchyModulus(lambda k: max(nx(2 * k), ny(2 * k)))


def partial_sums(a: SeriesTerms, first: int = 1) -> RealSeq:
    """``S_n = a(first) + ... + a(n)`` as a fold of :func:`real.add`.

    ``S_n`` is built on ``S_{n-1}``, so their memo tables are shared.
    Evaluation recurses once per term; for long sums with a known modulus
    use :func:`series_partial_sums`.
    """
    if first < 0:
        raise ValueError("first index must be >= 0")
    sums: list[Real] = []  # sums[i] is S_{first + i}
    lock = threading.Lock()

    def term(n: int) -> Real:
        if n < first:
            return R.from_rat(0)
        with lock:
            while len(sums) <= n - first:
                i = first + len(sums)
                sums.append(R.add(sums[-1], a(i)) if sums else a(i))
            return sums[n - first]

    return RealSeq(term)


def series_partial_sums(a: SeriesTerms, N: CauchyModulus, first: int = 1) -> RealSeq:
    """Partial sums that cut the tail off using the modulus ``N``.

    Term ``n`` is the same real as ``partial_sums(a, first).term(n)``, but its
    ``i``-th approximant sums only up to ``m = min(n, N(2i))``, each summand
    read at index ``2iL`` (``L`` terms).  That keeps ``|S_n - s_i| <= 1/i``
    while the work depends on ``N`` and not on ``n``.
    """

    def term(n: int) -> Real:
        def rule(i: int) -> Rat:
            m = min(n, N(2 * i))
            count = m - first + 1
            if count <= 0:
                return Rat(0)
            idx = 2 * i * count
            s = Rat(0)
            for j in range(first, m + 1):
                s = s + a(j).approx(idx)
            return s

        return R._make(rule, f"partial sum {n}")

    return RealSeq(term)


def series_limit(a: SeriesTerms, N: CauchyModulus, first: int = 1) -> tuple[Real, ConvergenceModulus]:
    return limit(series_partial_sums(a, N, first), N)


def ratio_test_modulus(
    a: SeriesTerms, c: RatLike, bound: RatLike, start: int, *, spot_check: int = 8
) -> CauchyModulus:
    """Modulus for the partial sums of ``a`` given ``|a(n)| <= bound * c**n``, ``n >= start``.

    ``N(k)`` is the least ``n >= start`` with ``bound * c**n / (1 - c) <= 1/k``,
    which bounds every tail beyond ``n``.  The certificate is the caller's;
    the first ``spot_check`` terms past ``start`` are refuted against it.
    """
    c = as_rat(c)
    bound = as_rat(bound)
    if not 0 < c < 1:
        raise ValueError(f"ratio must satisfy 0 < c < 1, got {c}")
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    if start < 0:
        raise ValueError("start must be >= 0")
    for n in range(start, start + spot_check):
        if R.le_refute(R.absolute(a(n)), R.from_rat(bound * c**n), (1, 4, 16)) is not None:
            raise ValueError(f"|a({n})| exceeds bound * c**{n}")

    scale = bound / (1 - c)
    memo: dict[int, int] = {}

    def fn(k: int) -> int:
        if k in memo:
            return memo[k]
        n = max(start, 1)
        tail = scale * c**n
        while tail * k > 1:
            n += 1
            tail = tail * c
        memo[k] = n
        return n

    return CauchyModulus(fn)


def comparison_test_modulus(a: SeriesTerms, b: SeriesTerms, Nb: CauchyModulus) -> CauchyModulus:
    """With ``|a(n)| <= b(n)`` for all ``n`` (caller's certificate), tails of
    ``sum a`` are dominated by those of ``sum b``, so ``b``'s modulus serves."""
    return Nb


def _exp_terms(q: Rat) -> Callable[[int], Real]:
    values = [Rat(1)]
    terms = [R.from_rat(1)]
    lock = threading.Lock()

    def a(n: int) -> Real:
        with lock:
            while len(terms) <= n:
                values.append(values[-1] * q / len(values))
                terms.append(R.from_rat(values[-1]))
            return terms[n]

    return a


def exp_rational(q: RatLike) -> Real:
    """``e**q`` for a rational ``|q| <= 4``, summed from ``sum q**n / n!``.

    From ``start = max(1, ceil(2|q|))`` on, consecutive terms shrink by at
    least half, so ``|a(n)| <= |a(start)| * 2**start * (1/2)**n``.
    """
    q = as_rat(q)
    if abs(q) > 4:
        raise ValueError(f"exp_rational supports |q| <= 4, got {q}")
    a = _exp_terms(q)
    start = max(1, (2 * abs(q)).ceil())
    bound = abs(a(start).approx(1)) * 2**start
    N = ratio_test_modulus(a, Rat(1, 2), bound, start)
    lim, _ = series_limit(a, N, first=0)
    lim.name = f"exp({q})"
    return lim


# -- uncountability ----------------------------------------------------------


class Diagonal:
    """Nested closed intervals avoiding each term of an enumeration.

    Step ``k`` splits the current interval (width ``w``) into thirds, reads
    ``p``, the enumerated real ``a_k`` to within ``w/12``, and keeps the
    leftmost third at distance ``>= w/6`` from ``p`` (an outer third always
    qualifies).  Every point of the kept third is then ``>= w/12`` from ``a_k``.
    Past the end of a finite enumeration the middle third is kept.
    """

    def __init__(self, enumeration: RealSeq | Sequence[Real], lo: Rat, hi: Rat) -> None:
        if isinstance(enumeration, RealSeq):
            self._term, self.length = enumeration.term, None
        else:
            items = list(enumeration)
            self._term, self.length = (lambda k: items[k - 1]), len(items)
        self._steps: list[tuple[Rat, Rat, int]] = [(lo, hi, 0)]  # (left, right, side)
        self._lock = threading.Lock()

    def interval(self, k: int) -> tuple[Rat, Rat]:
        """The interval after ``k`` steps; ``k = 0`` is ``[lo, hi]``."""
        with self._lock:
            while len(self._steps) <= k:
                self._steps.append(self._step(len(self._steps)))
            left, right, _ = self._steps[k]
        return left, right

    def _step(self, k: int) -> tuple[Rat, Rat, int]:
        left, right, _ = self._steps[k - 1]
        width = right - left
        third = width / 3
        if self.length is not None and k > self.length:
            return left + third, right - third, 0
        p = R.approx_eps(self._term(k), width / 12)
        margin = width / 6
        for i in range(3):
            lo = left + third * i
            hi = lo + third
            if p <= lo - margin:
                return lo, hi, 1
            if p >= hi + margin:
                return lo, hi, -1
        raise R.IntegrityError("no third of the interval avoids the approximant")

    def point(self) -> Real:
        lo, hi = self.interval(0)
        width0 = hi - lo

        def rule(n: int) -> Rat:
            # first step s with width0 / 3**s <= 1/n
            s = 0
            while width0 * n > 3**s:
                s += 1
            left, right = self.interval(s)
            return (left + right) / 2

        return R._make(rule, "diagonal")

    def witness(self, k: int) -> ApartnessWitness:
        """Apartness of ``x - a_k`` from zero, for the point ``x``."""
        if k < 1 or (self.length is not None and k > self.length):
            raise IndexError(f"no enumerated real at index {k}")
        self.interval(k)
        prev_left, prev_right, _ = self._steps[k - 1]
        side = self._steps[k][2]
        gap = (prev_right - prev_left) / 12
        return ApartnessWitness(side, (2 / gap).ceil())


def cantor_diagonal(
    enumeration: RealSeq | Sequence[Real], lo: RatLike, hi: RatLike
) -> tuple[Real, Callable[[int], ApartnessWitness]]:
    """A real in ``[lo, hi]`` apart from every enumerated real.

    ``enumeration`` is a :class:`RealSeq` or a finite list (indexed from 1).
    Returns the point ``x`` and a rule giving, for each ``k``, an
    :class:`ApartnessWitness` for ``x - a_k``.
    """
    lo, hi = as_rat(lo), as_rat(hi)
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    diag = Diagonal(enumeration, lo, hi)
    return diag.point(), diag.witness
