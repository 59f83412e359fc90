"""Frobenius numbers, gap sets, representability, and exact composition
counts for coin denomination sets.

Three layers compute the same zero set at very different storage costs:
exact big-integer counts (`recurrence`), a full boolean reachability array,
and a constant-size sliding window (`decision`). A brute-force `oracle`
validates all of them at desk scale, and `bench` measures the trade-off.
"""

from ._backend import available_backends, backend_name
from .bench import ALGORITHMS, BenchReport, bench, to_csv
from .bounds import TerminationPolicy, coprime_pair_bound, run_threshold
from .coinset import CoinSet, gcd_all, parse_coin_set
from .decision import (
    FrobeniusResult,
    ReachabilityWindow,
    frobenius,
    gaps,
    is_representable,
    reachability_sequence,
)
from .errors import (
    CoinGapError,
    CoinSetError,
    CoinTooLarge,
    EmptyInput,
    GcdNotOne,
    GuardExceeded,
    MalformedToken,
    NonPositiveCoin,
)
from .oracle import brute_count, brute_frobenius, brute_representable
from .recurrence import CountSequence, count_at, count_sequence

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS",
    "BenchReport",
    "CoinGapError",
    "CoinSet",
    "CoinSetError",
    "CoinTooLarge",
    "CountSequence",
    "EmptyInput",
    "FrobeniusResult",
    "GcdNotOne",
    "GuardExceeded",
    "MalformedToken",
    "NonPositiveCoin",
    "ReachabilityWindow",
    "TerminationPolicy",
    "available_backends",
    "backend_name",
    "bench",
    "brute_count",
    "brute_frobenius",
    "brute_representable",
    "coprime_pair_bound",
    "count_at",
    "count_sequence",
    "frobenius",
    "gaps",
    "gcd_all",
    "is_representable",
    "parse_coin_set",
    "reachability_sequence",
    "run_threshold",
    "to_csv",
]
