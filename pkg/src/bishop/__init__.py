"""Exact real numbers as regular sequences of rationals."""

from .rat import Ordering, Rat
from .real import (
    DEFAULT_BUDGET,
    ApartnessWitness,
    CanonicalBound,
    EqCounterexample,
    IntegrityError,
    LtWitness,
    Real,
    Side,
    absolute,
    add,
    apartness_from_lt,
    approx,
    approx_cmp,
    approx_eps,
    archimedean_bound,
    archimedean_witness,
    canonical_bound,
    dense_rational,
    doubling_budget,
    eq_refute,
    eq_tail_witness,
    from_rat,
    inv,
    le_refute,
    lt_search,
    maximum,
    minimum,
    mul,
    neg,
    sub,
)
from .seq import (
    CauchyModulus,
    ConvergenceModulus,
    RealSeq,
    cantor_diagonal,
    cauchy_from_convergent,
    comparison_test_modulus,
    exp_rational,
    limit,
    partial_sums,
    ratio_test_modulus,
    seq_add,
    series_limit,
    series_partial_sums,
)

__version__ = "0.1.0"
