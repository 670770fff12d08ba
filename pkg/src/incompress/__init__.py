"""Exact Todd-genus arithmetic and degree-formula incompressibility checks
for complete intersections in projective space."""

from .arith import bernoulli, p_adic_valuation, todd_number
from .errors import (
    DegreeMismatch,
    InconsistentPointIndex,
    InternalInconsistency,
    InvalidOperand,
    NonInvertibleSeries,
    NotApplicable,
    UndefinedValuation,
)
from .series import PowerSeries, reduced_exp_series, todd_series
from .symfun import Partition, lambda_p_partitions, monomial_in_basis, partitions_of
from .variety import (
    CompleteIntersection,
    char_number,
    char_number_table,
    euler_char_residue,
    euler_char_via_charnumbers,
    rost_number,
    u_p,
)
from .criteria import (
    MapHypothesis,
    Verdict,
    build_report,
    cond3_check,
    corollary_check,
    dfr_congruence_holds,
    myex_criterion,
    rost_congruence_holds,
)

__version__ = "0.1.0"


def clear_caches() -> None:
    """Drop all memoized tables (used for cold-start timing)."""
    from . import arith, series, symfun, variety

    for mod in (arith, series, symfun, variety):
        for obj in vars(mod).values():
            if hasattr(obj, "cache_clear"):
                obj.cache_clear()
