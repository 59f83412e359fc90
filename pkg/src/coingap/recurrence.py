"""Exact composition counts from the coin-indexed linear recurrence.

counts[0] = 1 (the empty stack) and counts[k] = sum of counts[k - c] over
the coins, with negative indices contributing 0. counts[k] is the number of
*ordered* stacks of coins totalling k: (2,3) and (3,2) are two stacks. The
classical denumerant counts unordered multisets instead; it is smaller but
vanishes for exactly the same k, which is all the decision layer needs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coinset import CoinSet


def _count_prefix(coins: tuple[int, ...], k_max: int) -> list[int]:
    counts = [0] * (k_max + 1)
    counts[0] = 1
    for k in range(1, k_max + 1):
        total = 0
        for c in coins:
            if c > k:
                break
            total += counts[k - c]
        counts[k] = total
    return counts


@dataclass(frozen=True)
class CountSequence:
    """Prefix counts[0..k_max] of the exact count sequence for one coin set.

    Entries are exact big integers; their bit length grows roughly linearly
    in k, so the retained prefix is deliberately the memory-hungry variant
    (the windowed boolean DP in `decision` is the lean one).
    """

    coin_set: CoinSet
    counts: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.counts)

    def __getitem__(self, k: int) -> int:
        return self.counts[k]


def count_sequence(cs: CoinSet, k_max: int) -> CountSequence:
    """Counts for every k in 0..k_max inclusive."""
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    return CountSequence(cs, tuple(_count_prefix(cs.coins, k_max)))


def count_at(cs: CoinSet, k: int) -> int:
    """Number of ordered coin stacks summing to exactly k."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return _count_prefix(cs.coins, k)[k]
