"""Upper-bound estimates and the termination policy for the decision sweep."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .coinset import CoinSet
from .errors import GcdNotOne

RUN_DETECTION = "run-detection"
EXPLICIT_BOUND = "explicit-bound"

# Explicit bounds drive a step-count loop; anything past a signed word is
# centuries of compute, so reject it up front instead of overflowing later.
MAX_BOUND = 2**63 - 1


@dataclass(frozen=True)
class TerminationPolicy:
    """How the decision sweep decides it has gone far enough.

    run-detection stops after c_min consecutive representable values, which
    certifies that every larger value is representable (keep adding the
    smallest coin). explicit-bound sweeps exactly 1..bound, faithful to an
    externally supplied upper bound on the Frobenius number; it reports
    whatever the largest gap below the bound was, so a bound below the true
    Frobenius number gives a wrong answer by construction.
    """

    kind: str
    bound: int | None = None

    def __post_init__(self):
        if self.kind not in (RUN_DETECTION, EXPLICIT_BOUND):
            raise ValueError(f"unknown policy kind: {self.kind!r}")
        if self.kind == EXPLICIT_BOUND:
            if self.bound is None or self.bound < 1:
                raise ValueError("explicit-bound needs bound >= 1")
            if self.bound > MAX_BOUND:
                raise ValueError(f"bound exceeds {MAX_BOUND}")
        elif self.bound is not None:
            raise ValueError("run-detection takes no bound")

    @classmethod
    def run_detection(cls) -> "TerminationPolicy":
        return cls(RUN_DETECTION)

    @classmethod
    def explicit(cls, bound: int) -> "TerminationPolicy":
        return cls(EXPLICIT_BOUND, bound)


def run_threshold(cs: CoinSet) -> int:
    """Run length of consecutive representable values that proves termination.

    c_min suffices: append the smallest coin to each of c_min consecutive
    representable values and the run extends forever.
    """
    return cs.c_min


def coprime_pair_bound(cs: CoinSet) -> int | None:
    """Smallest two-coin Frobenius value a*b - a - b over coprime pairs.

    Any coprime pair {a, b} within the set already representably covers
    everything above a*b - a - b, and adding coins never hurts, so the
    minimum over pairs upper-bounds the Frobenius number of the full set.
    Returns None when no pair is coprime (e.g. {6, 10, 15}) or when the set
    contains 1 (nothing is unrepresentable, so there is nothing to bound);
    advisory only, the sweep itself terminates by run detection.
    """
    if cs.g != 1:
        raise GcdNotOne(cs.g)
    if cs.c_min == 1:
        return None
    best = None
    for a, b in combinations(cs.coins, 2):
        if math.gcd(a, b) == 1:
            v = a * b - a - b
            if best is None or v < best:
                best = v
    return best
