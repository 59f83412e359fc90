"""Timing and working-set comparison across the DP variants.

The point of the ladder is the storage profile: the exact-count variant
keeps ever-growing integers, the full-array variant one boolean per value
swept, the window variants a constant c_max + 1 bytes. All four agree on
the Frobenius number, which the harness asserts.
"""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

from ._backend import get_kernels
from .bounds import run_threshold
from .coinset import CoinSet
from .errors import GcdNotOne
from .recurrence import count_sequence

ALGORITHMS = ("alg1-count", "alg2-full-array", "alg3-window", "alg3-literal-shift")


@dataclass(frozen=True)
class BenchReport:
    coin_set: CoinSet
    algorithm: str
    steps: int
    wall_time_ns: int
    working_set: int
    frobenius: int | None


def _variant(kern, cs: CoinSet, algo: str, horizon: int):
    """Returns (run, measure): run() executes the timed DP, measure(result)
    derives (last_zero, working_set) outside the timed region."""
    coins = cs.coins
    if algo == "alg1-count":
        def run():
            return count_sequence(cs, horizon)

        def measure(seq):
            last_zero = 0
            for k in range(horizon, 0, -1):
                if seq.counts[k] == 0:
                    last_zero = k
                    break
            return last_zero, sum(v.bit_length() for v in seq.counts)

    elif algo == "alg2-full-array":
        def run():
            return kern.full_sweep(coins, horizon, False)

        def measure(res):
            return res[0], res[4]

    elif algo in ("alg3-window", "alg3-literal-shift"):
        literal = algo == "alg3-literal-shift"
        threshold = run_threshold(cs)

        def run():
            return kern.window_sweep(coins, threshold, horizon, False, literal)

        def measure(res):
            return res[0], res[4]

    else:
        raise ValueError(f"unknown algorithm: {algo!r}")
    return run, measure


def bench(
    cs: CoinSet,
    algorithms=ALGORITHMS,
    repetitions: int = 3,
    bound: int | None = None,
    backend: str = "auto",
) -> list[BenchReport]:
    """Run each variant to the same horizon; report median wall time.

    The horizon is `bound` when given, otherwise the step count at which
    run detection stops (Frobenius number + c_min), so every variant does
    identical work. working_set is the variant's live DP storage: total
    stored count bits for alg1, array entries for alg2, window entries
    (c_max + 1) for the alg3 variants.
    """
    if cs.g != 1:
        raise GcdNotOne(cs.g)
    if repetitions < 1:
        raise ValueError("repetitions must be >= 1")
    kern = get_kernels(backend)
    if bound is None:
        _, horizon, _, _, _ = kern.window_sweep(cs.coins, run_threshold(cs), 0, False, False)
    else:
        horizon = bound

    reports = []
    for algo in algorithms:
        run, measure = _variant(kern, cs, algo, horizon)
        times = []
        result = None
        for _ in range(repetitions):
            t0 = time.perf_counter_ns()
            result = run()
            times.append(time.perf_counter_ns() - t0)
        last_zero, working_set = measure(result)
        reports.append(
            BenchReport(
                coin_set=cs,
                algorithm=algo,
                steps=horizon,
                wall_time_ns=int(statistics.median(times)),
                working_set=working_set,
                frobenius=last_zero if last_zero > 0 else None,
            )
        )

    answers = {r.frobenius for r in reports}
    if len(answers) > 1:
        raise AssertionError(f"variants disagree on {cs}: {answers}")
    return reports


def report_rows(reports: list[BenchReport]) -> list[dict]:
    """Rows as plain dicts with stable key order, for JSON output."""
    return [
        {
            "coins": list(r.coin_set.coins),
            "algorithm": r.algorithm,
            "steps": r.steps,
            "wall_time_ns": r.wall_time_ns,
            "working_set": r.working_set,
            "frobenius": r.frobenius,
        }
        for r in reports
    ]


def to_csv(reports: list[BenchReport]) -> str:
    """CSV with one row per report; coins are semicolon-joined."""
    lines = ["coins,algorithm,steps,wall_time_ns,working_set,frobenius"]
    for r in reports:
        coins = ";".join(str(c) for c in r.coin_set.coins)
        frob = "none" if r.frobenius is None else str(r.frobenius)
        lines.append(f"{coins},{r.algorithm},{r.steps},{r.wall_time_ns},{r.working_set},{frob}")
    return "\n".join(lines)
