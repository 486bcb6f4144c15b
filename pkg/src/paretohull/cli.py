"""Command-line front end: generate, solve, check, and bench subcommands.

Exit codes: 0 on success, 1 when `check` finds a disagreement, 2 on usage or
parse errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench as bench_mod
from .engine import (
    DegenerateOutcomeSetError,
    bd_dichotomy,
    dummy_dichotomy,
    inflate_balloon,
    lexicographic_seed,
)
from .files import ParseError, generate, parse_instance, write_instance, write_points, write_report
from .oracle import OversizeError, enumerate_outcomes, oracle_ysn1
from .solvers import InstanceError, RunStats, canonicalize


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paretohull",
        description="Enumerate nondominated extreme points of multi-objective "
                    "assignment and knapsack instances.")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write a random instance file")
    gen.add_argument("kind", choices=["ap", "kp"])
    gen.add_argument("p", type=int, help="number of objectives (2..5)")
    gen.add_argument("n", type=int, help="instance size")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", type=Path, default=None,
                     help="output file (default: stdout)")

    solve = sub.add_parser("solve", help="solve an instance file")
    solve.add_argument("instance", type=Path)
    solve.add_argument("--algorithm", choices=["dummy", "bd", "balloon"],
                       default="dummy")
    solve.add_argument("--arithmetic", choices=["exact", "float"], default="exact")
    solve.add_argument("--tolerance", type=float, default=1e-7,
                       help="float-mode confirmation tolerance")
    solve.add_argument("--out", type=Path, default=None,
                       help="result file (default: <instance>.sol)")
    solve.add_argument("--init-from-lex", action="store_true",
                       help="seed the balloon search from lexicographic optima "
                            "(the only seeding offered; flag kept for "
                            "explicitness)")

    check = sub.add_parser("check", help="cross-check both algorithms against "
                                         "the brute-force oracle")
    check.add_argument("instance", type=Path)

    bench = sub.add_parser("bench", help="benchmark a generated series")
    bench.add_argument("kind", choices=["ap", "kp"])
    bench.add_argument("p", type=int)
    bench.add_argument("sizes", type=int, nargs="+")
    bench.add_argument("--instances", type=int, default=10,
                       help="instances per size")
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--parallel", type=int, default=1)
    bench.add_argument("--out", type=Path, default=None,
                       help="also write the rows as JSON")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except (ParseError, InstanceError, OversizeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args) -> int:
    if args.command == "generate":
        text = write_instance(generate(args.kind, args.p, args.n, args.seed))
        if args.out is None:
            sys.stdout.write(text)
        else:
            args.out.write_text(text)
        return 0
    if args.command == "solve":
        return _cmd_solve(args)
    if args.command == "check":
        return _cmd_check(args)
    if args.command == "bench":
        return _cmd_bench(args)
    raise AssertionError(f"unhandled command {args.command}")


def _cmd_solve(args) -> int:
    inst = canonicalize(parse_instance(args.instance.read_text()))
    try:
        if args.algorithm == "dummy":
            result = dummy_dichotomy(inst, args.arithmetic, tolerance=args.tolerance)
        elif args.algorithm == "bd":
            result = bd_dichotomy(inst, args.arithmetic, tolerance=args.tolerance)
        else:
            stats = RunStats()
            seed = lexicographic_seed(inst, stats)
            result = inflate_balloon(inst, seed, args.arithmetic,
                                     tolerance=args.tolerance)
            # seeding solves happened outside the balloon run's own stats
            result.stats.solver_calls += stats.solver_calls
            result.stats.float_calls += stats.float_calls
    except DegenerateOutcomeSetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out = args.out if args.out is not None else args.instance.with_suffix(".sol")
    out.write_text(write_points(result.points))
    sys.stdout.write(write_report(result.stats))
    for warning in result.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    return 0


def _cmd_check(args) -> int:
    inst = canonicalize(parse_instance(args.instance.read_text()))
    truth = {tuple(inst.to_original(v)) for v in oracle_ysn1(enumerate_outcomes(inst))}
    claimed = {
        "dummy": {tuple(op.y) for op in dummy_dichotomy(inst, "exact").points},
        "bd": {tuple(op.y) for op in bd_dichotomy(inst, "exact").points},
    }
    ok = all(points == truth for points in claimed.values())
    print("PASS" if ok else "FAIL")
    if not ok:
        print(f"oracle: {sorted(truth)}")
        for name, points in claimed.items():
            print(f"{name}: {sorted(points)}")
    return 0 if ok else 1


def _cmd_bench(args) -> int:
    rows = bench_mod.run_series(args.kind, args.p, args.sizes, args.instances,
                                args.seed, parallel=args.parallel)
    sys.stdout.write(bench_mod.format_table(rows))
    if args.out is not None:
        args.out.write_text(bench_mod.rows_to_json(rows))
    return 0


if __name__ == "__main__":
    sys.exit(main())
