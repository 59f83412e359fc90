"""Pure-Python reachability kernels.

The compiled extension (coingap._kernels) provides the same four entry
points with identical semantics; coingap._backend picks whichever imports.
All functions take the denominations as a sorted ascending tuple of distinct
positive ints; callers own validation.

Every kernel tracks reachability booleans only. A value k > 0 is reachable
iff some k - c is, with k - c < 0 contributing "unreachable"; value 0 is
reachable (empty stack). The windowed kernels keep exactly c_max + 1 slots,
which is sufficient because no step looks back further than c_max.
"""

from __future__ import annotations

BACKEND = "python"


def window_sweep(coins, threshold, bound, collect_gaps=False, literal_shift=False):
    """Windowed sweep over values 1, 2, ... with constant live storage.

    Returns (last_zero, iterations, bound_reached, gaps, working_set):
    last_zero is the largest value seen unreachable (0 if none), iterations
    the number of DP steps, gaps the unreachable values in order (None
    unless collect_gaps), working_set the window length c_max + 1.

    bound > 0 runs exactly `bound` steps. bound == 0 stops once `threshold`
    consecutive reachable values appear; with threshold = c_min that run
    extends forever by adding the smallest coin, so for gcd 1 the sweep
    provably halts just past the Frobenius number.

    literal_shift physically moves the window each step (O(c_max) per step)
    instead of rotating an index; identical results, kept for the space/time
    comparison in the bench harness.
    """
    width = coins[-1] + 1
    buf = bytearray(width)
    gaps = [] if collect_gaps else None
    last_zero = 0
    run = 0
    i = 0
    if literal_shift:
        # buf[width - 1] is the newest value i - 1, buf[width - 1 - d] is i - 1 - d
        buf[width - 1] = 1
        while True:
            if bound:
                if i >= bound:
                    break
            elif run >= threshold:
                break
            i += 1
            x = 0
            for c in coins:
                if c > i:
                    break
                if buf[width - c]:
                    x = 1
                    break
            buf[: width - 1] = buf[1:]
            buf[width - 1] = x
            if x:
                run += 1
            else:
                last_zero = i
                run = 0
                if gaps is not None:
                    gaps.append(i)
    else:
        # circular: value v lives in slot v % width; the slot of v is freed
        # exactly when v + width is written, which is after the last read of v
        buf[0] = 1
        while True:
            if bound:
                if i >= bound:
                    break
            elif run >= threshold:
                break
            i += 1
            x = 0
            for c in coins:
                if c > i:
                    break
                if buf[(i - c) % width]:
                    x = 1
                    break
            buf[i % width] = x
            if x:
                run += 1
            else:
                last_zero = i
                run = 0
                if gaps is not None:
                    gaps.append(i)
    return last_zero, i, bound > 0, gaps, width


def full_sweep(coins, bound, collect_gaps=False):
    """Full-array sweep over 1..bound; same return shape as window_sweep.

    Keeps one boolean per value, so working_set is bound + 1 entries. This
    is the linear-space variant the windowed kernels improve on.
    """
    buf = bytearray(bound + 1)
    buf[0] = 1
    gaps = [] if collect_gaps else None
    last_zero = 0
    for i in range(1, bound + 1):
        x = 0
        for c in coins:
            if c > i:
                break
            if buf[i - c]:
                x = 1
                break
        buf[i] = x
        if not x:
            last_zero = i
            if gaps is not None:
                gaps.append(i)
    return last_zero, bound, True, gaps, bound + 1


def reachability_bytes(coins, limit):
    """Reachability of every value 0..limit as a bytearray of 0/1."""
    buf = bytearray(limit + 1)
    buf[0] = 1
    for i in range(1, limit + 1):
        for c in coins:
            if c > i:
                break
            if buf[i - c]:
                buf[i] = 1
                break
    return buf


def window_contains(coins, x, threshold):
    """True iff value x is reachable, via the windowed sweep.

    Once `threshold` consecutive reachable values appear every later value
    is reachable too, so the sweep may return early with True.
    """
    if x == 0:
        return True
    if x < coins[0]:
        return False
    width = coins[-1] + 1
    buf = bytearray(width)
    buf[0] = 1
    run = 0
    v = 0
    for i in range(1, x + 1):
        v = 0
        for c in coins:
            if c > i:
                break
            if buf[(i - c) % width]:
                v = 1
                break
        buf[i % width] = v
        if v:
            run += 1
            if run >= threshold:
                return True
        else:
            run = 0
    return bool(v)
