"""Shared generators and exact checkers for the test suite."""

from __future__ import annotations

import random
from collections.abc import Iterable

from hypothesis import strategies as st

from bishop import real as R
from bishop.rat import Rat
from bishop.real import Real

SMALL_INDICES = list(range(1, 51))
REGULARITY_INDICES = SMALL_INDICES + [1000, 10**6]
BUDGET_100 = range(1, 101)


def zero_as_recip() -> Real:
    """The real 0 represented by ``n -> 1/n``."""
    return Real.unchecked(lambda n: Rat(1, n), "1/n")


# Regular representatives of a rational q, each within 1/n of q at index n.
JITTERS = {
    "const": lambda q: R.from_rat(q),
    "above": lambda q: Real.unchecked(lambda n: q + Rat(1, n), f"{q}+1/n"),
    "below": lambda q: Real.unchecked(lambda n: q - Rat(1, n), f"{q}-1/n"),
    "alternating": lambda q: Real.unchecked(lambda n: q + Rat((-1) ** n, n), f"{q}+(-1)^n/n"),
    "floor": lambda q: Real.unchecked(lambda n: Rat((q * n).floor(), n), f"floor({q}n)/n"),
}


def random_rat(rng: random.Random, limit: int = 20) -> Rat:
    return Rat(rng.randint(-limit, limit), rng.randint(1, limit))


def random_leaf(rng: random.Random, limit: int = 20) -> tuple[Real, Rat]:
    q = random_rat(rng, limit)
    kind = rng.choice(sorted(JITTERS))
    return JITTERS[kind](q), q


def random_tree(rng: random.Random, depth: int, with_inv: bool = True) -> Real:
    """A random expression over add/neg/mul/max/min/abs and witnessed inv."""
    if depth == 0 or rng.random() < 0.2:
        return random_leaf(rng)[0]
    op = rng.choice(["add", "neg", "mul", "max", "min", "abs", "inv"] if with_inv else
                    ["add", "neg", "mul", "max", "min", "abs"])
    if op in ("add", "mul", "max", "min"):
        x = random_tree(rng, depth - 1, with_inv)
        y = random_tree(rng, depth - 1, with_inv)
        return {"add": R.add, "mul": R.mul, "max": R.maximum, "min": R.minimum}[op](x, y)
    x = random_tree(rng, depth - 1, with_inv)
    if op == "neg":
        return R.neg(x)
    if op == "abs":
        return R.absolute(x)
    w = R.lt_search(R.from_rat(0), R.absolute(x), R.doubling_budget(12))
    if w is None:
        return R.neg(x)
    return R.inv(x, R.apartness_from_lt(x, w))


def regularity_violations(x: Real, indices: Iterable[int] = REGULARITY_INDICES) -> list[tuple[int, int]]:
    """Index pairs with ``|x_m - x_n| > 1/m + 1/n``, checked exactly."""
    idx = list(indices)
    vals = {n: x.approx(n) for n in idx}
    bad = []
    for i, m in enumerate(idx):
        a = vals[m]
        for n in idx[i + 1:]:
            b = vals[n]
            # |a - b| <= 1/m + 1/n  <=>  |a.num b.den - b.num a.den| m n <= (m + n) a.den b.den
            lhs = abs(a.num * b.den - b.num * a.den) * m * n
            if lhs > (m + n) * a.den * b.den:
                bad.append((m, n))
    return bad


rats = st.builds(Rat, st.integers(-20, 20), st.integers(1, 20))
nonzero_rats = rats.filter(lambda q: q != 0)
jitter_kinds = st.sampled_from(sorted(JITTERS))


@st.composite
def reals(draw, values=rats) -> Real:
    q = draw(values)
    return JITTERS[draw(jitter_kinds)](q)


@st.composite
def valued_reals(draw, values=rats) -> tuple[Real, Rat]:
    q = draw(values)
    return JITTERS[draw(jitter_kinds)](q), q
