"""Coin denomination sets: parsing, validation, canonical form."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable

from .errors import CoinTooLarge, EmptyInput, MalformedToken, NonPositiveCoin

# The windowed DP indexes by value, so anything beyond a machine word is
# unallocatable long before this limit matters.
MAX_COIN = 2**64 - 1

_INT_TOKEN = re.compile(r"[+-]?\d+", re.ASCII)


def gcd_all(coins: Iterable[int]) -> int:
    """Gcd of all values, folded pairwise; order never changes the result."""
    values = list(coins)
    if not values:
        raise ValueError("gcd_all needs at least one value")
    return reduce(math.gcd, values)


@dataclass(frozen=True)
class CoinSet:
    """Canonical set of coin denominations.

    ``coins`` is strictly increasing with every entry in [1, 2**64 - 1];
    ``g`` caches the overall gcd. Instances are immutable and safe to share
    across threads.
    """

    coins: tuple[int, ...]
    g: int

    def __post_init__(self):
        if not self.coins:
            raise EmptyInput("coin set is empty")
        prev = 0
        for c in self.coins:
            if c <= 0:
                raise NonPositiveCoin(f"denominations must be positive, got {c}")
            if c > MAX_COIN:
                raise CoinTooLarge(f"{c} does not fit in an unsigned 64-bit word")
            if c <= prev:
                raise ValueError("denominations must be strictly increasing")
            prev = c
        if self.g != gcd_all(self.coins):
            raise ValueError(f"cached gcd {self.g} does not match denominations")

    @classmethod
    def of(cls, values: Iterable[int]) -> "CoinSet":
        """Canonicalize arbitrary positive integers: dedupe, sort, cache gcd."""
        coins = tuple(sorted(set(values)))
        if not coins:
            raise EmptyInput("coin set is empty")
        return cls(coins, gcd_all(coins))

    @property
    def c_min(self) -> int:
        return self.coins[0]

    @property
    def c_max(self) -> int:
        return self.coins[-1]

    @property
    def n(self) -> int:
        return len(self.coins)

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coins)


def parse_coin_set(text: str) -> CoinSet:
    """Parse a comma- and/or whitespace-separated list of denominations.

    Duplicates collapse silently and the result is sorted, so parsing the
    serialized form of a CoinSet reproduces it exactly. A gcd above 1 is not
    rejected here; callers decide whether they need coprimality.
    """
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise EmptyInput("no denominations given")
    values = []
    for tok in tokens:
        if not _INT_TOKEN.fullmatch(tok):
            raise MalformedToken(f"not an integer: {tok!r}")
        v = int(tok)
        if v <= 0:
            raise NonPositiveCoin(f"denominations must be positive, got {v}")
        if v > MAX_COIN:
            raise CoinTooLarge(f"{v} does not fit in an unsigned 64-bit word")
        values.append(v)
    return CoinSet.of(values)
