"""Brute-force reference implementations.

These exist to check the DP modules, so they deliberately share no code
with them: representability is decided by a depth-first search over
coefficient vectors, counting by enumerating every stack one by one. Guards
are hard errors; a silently truncated oracle would be worse than none.
"""

from __future__ import annotations

from .coinset import CoinSet
from .errors import GcdNotOne, GuardExceeded

REPRESENTABLE_LIMIT = 10**6
FROBENIUS_COIN_LIMIT = 200
COUNT_LIMIT = 40


def _search(coins: tuple[int, ...], x: int, memo: dict) -> bool:
    """Coefficient-vector DFS: can x be paid using coins[i:] for state (i, x)?

    From (i, rem) either spend one more of coin i or fix its count and move
    to i + 1. The spend chain can be x / c_min deep, hence the explicit
    stack. memo holds fully decided states and may be shared across calls
    for the same coin tuple.
    """
    n = len(coins)
    root = (0, x)
    stack = [root]
    while stack:
        state = stack[-1]
        if state in memo:
            stack.pop()
            continue
        i, rem = state
        if rem == 0:
            memo[state] = True
            stack.pop()
            continue
        if i == n:
            memo[state] = False
            stack.pop()
            continue
        c = coins[i]
        take = (i, rem - c) if c <= rem else None
        t = memo.get(take) if take is not None else False
        if t:
            memo[state] = True
            stack.pop()
            continue
        if t is None:
            stack.append(take)
            continue
        skip = (i + 1, rem)
        s = memo.get(skip)
        if s is None:
            stack.append(skip)
            continue
        memo[state] = s
        stack.pop()
    return memo[root]


def brute_representable(cs: CoinSet, x: int) -> bool:
    """Exhaustively decide whether x is a sum of coins with repetition."""
    if x < 0:
        raise ValueError("x must be nonnegative")
    if x > REPRESENTABLE_LIMIT:
        raise GuardExceeded(f"x={x} exceeds the brute-force guard {REPRESENTABLE_LIMIT}")
    return _search(cs.coins, x, {})


def brute_frobenius(cs: CoinSet) -> int | None:
    """Scan upward until c_min consecutive hits; the last miss is the answer.

    None when the set contains 1 (every value is representable). One memo is
    shared across the scan; the states are the same search space either way.
    """
    if cs.g != 1:
        raise GcdNotOne(cs.g)
    if cs.c_max > FROBENIUS_COIN_LIMIT:
        raise GuardExceeded(f"c_max={cs.c_max} exceeds the brute-force guard {FROBENIUS_COIN_LIMIT}")
    if cs.c_min == 1:
        return None
    memo: dict = {}
    run = 0
    last_miss = 0
    x = 0
    while run < cs.c_min:
        x += 1
        if _search(cs.coins, x, memo):
            run += 1
        else:
            last_miss = x
            run = 0
    return last_miss


def brute_count(cs: CoinSet, k: int) -> int:
    """Count ordered stacks summing to k by enumerating each one.

    Cost is proportional to the count itself (exponential in k); the guard
    caps k, and callers keep inputs at desk scale.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > COUNT_LIMIT:
        raise GuardExceeded(f"k={k} exceeds the brute-force guard {COUNT_LIMIT}")
    if k == 0:
        return 1
    coins = cs.coins

    def walk(rem: int) -> int:
        total = 0
        for c in coins:
            if c > rem:
                break
            if c == rem:
                total += 1
            else:
                total += walk(rem - c)
        return total

    return walk(k)
