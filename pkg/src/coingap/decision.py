"""Representability queries, Frobenius number, and gap set.

Everything here works on reachability booleans only: value 0 is reachable
(the empty stack), and k > 0 is reachable iff some k - c is, c ranging over
the coins. That keeps the live state tiny where the exact-count recurrence
in `recurrence` grows without bound; both share one zero set.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._backend import get_kernels
from .bounds import EXPLICIT_BOUND, TerminationPolicy, run_threshold
from .coinset import CoinSet
from .errors import GcdNotOne

RUN_DETECTED = "run-detected"
BOUND_REACHED = "bound-reached"


class ReachabilityWindow:
    """Stepwise window DP state, one value per step.

    Exactly c_max + 1 booleans stay live: the values next_k - (c_max + 1)
    .. next_k - 1 (clamped at 0), each in slot value % (c_max + 1). A slot
    is overwritten only when its old value can no longer be read. This class
    is the instrumentable reference; the kernels run the same recurrence as
    flat loops.
    """

    def __init__(self, cs: CoinSet):
        self.coins = cs.coins
        self.width = cs.c_max + 1
        self.window = bytearray(self.width)
        self.window[0] = 1
        self.next_k = 1
        self.run_length = 0
        self.last_zero: int | None = None

    def step(self) -> bool:
        """Compute and record reachability of value next_k; returns it."""
        k = self.next_k
        reachable = False
        for c in self.coins:
            if c > k:
                break
            if self.window[(k - c) % self.width]:
                reachable = True
                break
        self.window[k % self.width] = 1 if reachable else 0
        self.next_k = k + 1
        if reachable:
            self.run_length += 1
        else:
            self.run_length = 0
            self.last_zero = k
        return reachable

    def value_at(self, v: int) -> bool:
        """Reachability of a value still inside the window."""
        if not (max(0, self.next_k - self.width) <= v < self.next_k):
            raise IndexError(f"value {v} is outside the live window")
        return bool(self.window[v % self.width])


@dataclass(frozen=True)
class FrobeniusResult:
    """Outcome of a Frobenius sweep.

    frobenius is None exactly when the set contains 1 (no gaps at all).
    gaps/genus are filled only when gap collection was requested. iterations
    is the number of DP steps the sweep executed.
    """

    coin_set: CoinSet
    frobenius: int | None
    gaps: tuple[int, ...] | None
    genus: int | None
    iterations: int
    termination: str

    @property
    def exists(self) -> bool:
        return self.frobenius is not None


def reachability_sequence(cs: CoinSet, limit: int, backend: str = "auto") -> list[bool]:
    """Reachability of every value 0..limit, as a list of booleans."""
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    raw = get_kernels(backend).reachability_bytes(cs.coins, limit)
    return [b == 1 for b in raw]


def is_representable(cs: CoinSet, x: int, backend: str = "auto") -> bool:
    """True iff x is a nonnegative integer combination of the coins.

    Windowed sweep: O(x * n) time, c_max + 1 bytes of live state. Works for
    any gcd; no finite-Frobenius precondition.
    """
    if x < 0:
        raise ValueError("x must be nonnegative")
    return bool(get_kernels(backend).window_contains(cs.coins, x, run_threshold(cs)))


def frobenius(
    cs: CoinSet,
    policy: TerminationPolicy | None = None,
    *,
    collect_gaps: bool = False,
    backend: str = "auto",
) -> FrobeniusResult:
    """Largest unrepresentable positive value, via the windowed sweep.

    Requires gcd 1 (otherwise the gap set is infinite and GcdNotOne is
    raised). A set containing 1 has no gaps at all; that comes back as
    frobenius None rather than an error. Default policy is run detection;
    pass TerminationPolicy.explicit(F) to sweep exactly 1..F instead.

    Gap collection is opt-in so the plain query keeps strictly constant
    auxiliary space.
    """
    if cs.g != 1:
        raise GcdNotOne(cs.g)
    if policy is None:
        policy = TerminationPolicy.run_detection()
    bound = policy.bound if policy.kind == EXPLICIT_BOUND else 0
    last_zero, iterations, bound_reached, gap_list, _ = get_kernels(backend).window_sweep(
        cs.coins, run_threshold(cs), bound, collect_gaps, False
    )
    return FrobeniusResult(
        coin_set=cs,
        frobenius=last_zero if last_zero > 0 else None,
        gaps=tuple(gap_list) if gap_list is not None else None,
        genus=len(gap_list) if gap_list is not None else None,
        iterations=iterations,
        termination=BOUND_REACHED if bound_reached else RUN_DETECTED,
    )


def gaps(cs: CoinSet, backend: str = "auto") -> list[int]:
    """All unrepresentable positive values, sorted ascending."""
    result = frobenius(cs, collect_gaps=True, backend=backend)
    return list(result.gaps or ())
