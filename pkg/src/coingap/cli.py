"""Command-line front end.

Subcommands: frobenius, representable, gaps, count, bench, oracle. Results
go to stdout, diagnostics to stderr. Exit codes: 0 success, 1 domain error
(gcd above 1, brute-force guard), 2 usage or input parse error.

Default output is one human-readable value per line; --json switches to a
compact single-document schema with stable key order, so identical inputs
produce byte-identical output (bench wall times excepted). Counts are
serialized as decimal strings because they outgrow native JSON numbers.
"""

from __future__ import annotations

import argparse
import json
import sys

from ._backend import available_backends
from .bench import ALGORITHMS, BenchReport, bench, report_rows, to_csv
from .bounds import TerminationPolicy
from .coinset import parse_coin_set
from .decision import FrobeniusResult, frobenius, is_representable
from .errors import CoinSetError, GcdNotOne, GuardExceeded
from .oracle import brute_count, brute_frobenius, brute_representable
from .recurrence import CountSequence, count_at, count_sequence

SEQUENCE_GUARD = 100_000


def _dumps(doc) -> str:
    return json.dumps(doc, separators=(",", ":"))


def _frobenius_doc(res: FrobeniusResult) -> dict:
    return {
        "coins": list(res.coin_set.coins),
        "frobenius": res.frobenius,
        "exists": res.exists,
        "genus": res.genus,
        "gaps": list(res.gaps) if res.gaps is not None else None,
        "iterations": res.iterations,
        "termination": res.termination,
    }


def emit_json(result) -> str:
    """Compact JSON for a result object; parse-and-redump is byte-stable."""
    if isinstance(result, FrobeniusResult):
        return _dumps(_frobenius_doc(result))
    if isinstance(result, CountSequence):
        return _dumps({"k_max": len(result) - 1, "counts": [str(v) for v in result.counts]})
    if isinstance(result, BenchReport):
        return _dumps(report_rows([result])[0])
    if isinstance(result, list) and all(isinstance(r, BenchReport) for r in result):
        return _dumps(report_rows(result))
    raise TypeError(f"cannot serialize {type(result).__name__}")


def _policy(args) -> TerminationPolicy | None:
    if getattr(args, "bound", None) is not None:
        return TerminationPolicy.explicit(args.bound)
    return None


def _print_frobenius(res: FrobeniusResult, as_json: bool, with_gaps: bool) -> None:
    if as_json:
        print(emit_json(res))
        return
    print("none" if res.frobenius is None else res.frobenius)
    if with_gaps:
        print("gaps:", " ".join(str(g) for g in res.gaps or ()))
        print("genus:", res.genus)


def _cmd_frobenius(args) -> int:
    cs = parse_coin_set(args.coins)
    res = frobenius(cs, _policy(args), collect_gaps=args.gaps)
    _print_frobenius(res, args.json, args.gaps)
    return 0


def _cmd_representable(args) -> int:
    cs = parse_coin_set(args.coins)
    answer = is_representable(cs, args.x)
    if args.json:
        print(_dumps({"coins": list(cs.coins), "x": args.x, "representable": answer}))
    else:
        print("true" if answer else "false")
    return 0


def _cmd_gaps(args) -> int:
    cs = parse_coin_set(args.coins)
    res = frobenius(cs, collect_gaps=True)
    if args.json:
        print(emit_json(res))
    else:
        print(" ".join(str(g) for g in res.gaps or ()))
    return 0


def _cmd_count(args) -> int:
    cs = parse_coin_set(args.coins)
    limit = None if args.unsafe_no_limit else args.limit
    if limit is not None and args.k > limit:
        print(
            f"error: k={args.k} exceeds the guard {limit}; "
            "raise it with --limit or pass --unsafe-no-limit",
            file=sys.stderr,
        )
        return 2
    if args.sequence:
        seq = count_sequence(cs, args.k)
        if args.json:
            print(emit_json(seq))
        else:
            print(" ".join(str(v) for v in seq.counts))
    else:
        value = count_at(cs, args.k)
        if args.json:
            print(_dumps({"k": args.k, "count": str(value)}))
        else:
            print(value)
    return 0


def _cmd_bench(args) -> int:
    cs = parse_coin_set(args.coins)
    reports = bench(
        cs,
        algorithms=tuple(args.algo),
        repetitions=args.reps,
        bound=args.bound,
        backend=args.backend,
    )
    if args.format == "json":
        print(emit_json(reports))
    else:
        print(to_csv(reports))
    return 0


def _cmd_oracle(args) -> int:
    cs = parse_coin_set(args.coins)
    if args.oracle_op == "frobenius":
        value = brute_frobenius(cs)
        if args.json:
            print(_dumps({"coins": list(cs.coins), "frobenius": value, "exists": value is not None}))
        else:
            print("none" if value is None else value)
    elif args.oracle_op == "representable":
        answer = brute_representable(cs, args.x)
        if args.json:
            print(_dumps({"coins": list(cs.coins), "x": args.x, "representable": answer}))
        else:
            print("true" if answer else "false")
    else:
        value = brute_count(cs, args.k)
        if args.json:
            print(_dumps({"k": args.k, "count": str(value)}))
        else:
            print(value)
    return 0


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coingap",
        description="Frobenius numbers, gap sets, representability and exact counts "
        "for coin denomination sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("frobenius", help="largest unrepresentable value")
    p.add_argument("coins", help="denominations, comma- or space-separated")
    p.add_argument("--gaps", action="store_true", help="also collect the gap set")
    p.add_argument("--bound", type=_positive, help="sweep exactly 1..BOUND instead of run detection")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_frobenius)

    p = sub.add_parser("representable", help="is x a sum of coins?")
    p.add_argument("coins")
    p.add_argument("x", type=_nonneg)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_representable)

    p = sub.add_parser("gaps", help="all unrepresentable values")
    p.add_argument("coins")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_gaps)

    p = sub.add_parser("count", help="exact number of ordered coin stacks summing to k")
    p.add_argument("coins")
    p.add_argument("k", type=_nonneg)
    p.add_argument("--sequence", action="store_true", help="print counts for all of 0..k")
    p.add_argument("--limit", type=_nonneg, default=SEQUENCE_GUARD, help="refuse k above this (default %(default)s)")
    p.add_argument("--unsafe-no-limit", action="store_true", help="disable the k guard")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("bench", help="compare the DP variants on one coin set")
    p.add_argument("coins")
    p.add_argument("--algo", nargs="+", choices=ALGORITHMS, default=list(ALGORITHMS))
    p.add_argument("--reps", type=_positive, default=3)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--bound", type=_positive, help="fixed horizon instead of run detection")
    p.add_argument("--backend", choices=("auto",) + available_backends(), default="auto")
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("oracle", help="brute-force reference implementations")
    osub = p.add_subparsers(dest="oracle_op", required=True)
    q = osub.add_parser("frobenius")
    q.add_argument("coins")
    q.add_argument("--json", action="store_true")
    q = osub.add_parser("representable")
    q.add_argument("coins")
    q.add_argument("x", type=_nonneg)
    q.add_argument("--json", action="store_true")
    q = osub.add_parser("count")
    q.add_argument("coins")
    q.add_argument("k", type=_nonneg)
    q.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_oracle)

    return parser


def run(argv=None) -> int:
    """Parse argv and dispatch; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage error, 0 on --help
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except CoinSetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (GcdNotOne, GuardExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
