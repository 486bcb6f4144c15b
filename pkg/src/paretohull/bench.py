"""Benchmark harness: run the algorithm variants over generated series.

A series is (kind, p, sizes, instances per size, base seed).  Every instance
runs four variants: dummy-initialized and subproblem-initialized search, each
in exact and float arithmetic.  The text table mirrors the experimental
report layout: mean solver calls carry the percentage of float solver calls
in brackets, and the subproblem-initialized columns additionally carry the
mean initialization call count in square brackets.  Per-variant failures
render as "x" cells.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .engine import bd_dichotomy, dummy_dichotomy
from .files import SplitMix64, generate
from .solvers import canonicalize

VARIANTS = ("v1_ex", "v2_ex", "v1_fl", "v2_fl")


@dataclass
class BenchRow:
    label: str
    size: int
    instances: int
    mean_ysn1: float | None = None
    mean_calls: dict = field(default_factory=dict)
    mean_float_pct: dict = field(default_factory=dict)
    mean_init_calls: dict = field(default_factory=dict)
    mean_time: dict = field(default_factory=dict)
    failures: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "size": self.size,
            "instances": self.instances,
            "mean_ysn1": self.mean_ysn1,
            "mean_solver_calls": self.mean_calls,
            "mean_float_call_percent": self.mean_float_pct,
            "mean_init_solver_calls": self.mean_init_calls,
            "mean_wall_time": self.mean_time,
            "failures": self.failures,
        }


def _variant_run(variant: str, inst):
    algorithm, arithmetic = variant.split("_")
    runner = dummy_dichotomy if algorithm == "v1" else bd_dichotomy
    mode = "exact" if arithmetic == "ex" else "float"
    return runner(inst, mode)


def _bench_one(task: tuple) -> dict:
    kind, p, n, seed = task
    inst = canonicalize(generate(kind, p, n, seed))
    cell: dict = {"seed": seed}
    for variant in VARIANTS:
        try:
            result = _variant_run(variant, inst)
            stats = result.stats
            cell[variant] = {
                "ysn1": stats.extreme_points_found,
                "calls": stats.solver_calls,
                "float_calls": stats.float_calls,
                "init_calls": stats.init_solver_calls,
                "time": stats.wall_time,
            }
        except Exception as exc:  # failures become missing cells
            cell[variant] = {"error": f"{type(exc).__name__}: {exc}"}
    return cell


def run_series(kind: str, p: int, sizes: list[int], count: int,
               seed_base: int, parallel: int = 1) -> list[BenchRow]:
    """Benchmark one series; deterministic given its arguments."""
    stream = SplitMix64(seed_base)
    tasks = []
    for n in sizes:
        for _ in range(count):
            tasks.append((kind, p, n, stream.next_u64()))
    if parallel > 1 and tasks:
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            cells = list(pool.map(_bench_one, tasks))
    else:
        cells = [_bench_one(t) for t in tasks]
    rows = []
    label = f"{p}{kind}".upper()
    for idx, n in enumerate(sizes):
        chunk = cells[idx * count:(idx + 1) * count]
        rows.append(_aggregate(label, n, chunk))
    return rows


def _aggregate(label: str, size: int, cells: list[dict]) -> BenchRow:
    row = BenchRow(label, size, len(cells))
    reference = [c["v2_ex"]["ysn1"] for c in cells if "ysn1" in c.get("v2_ex", {})]
    row.mean_ysn1 = _mean(reference)
    for variant in VARIANTS:
        ok = [c[variant] for c in cells if "ysn1" in c.get(variant, {})]
        row.failures[variant] = len(cells) - len(ok)
        if not ok:
            continue
        row.mean_calls[variant] = _mean([c["calls"] for c in ok])
        pct = [100.0 * c["float_calls"] / c["calls"] if c["calls"] else 0.0 for c in ok]
        row.mean_float_pct[variant] = _mean(pct)
        row.mean_init_calls[variant] = _mean([c["init_calls"] for c in ok])
        row.mean_time[variant] = _mean([c["time"] for c in ok])
    return row


def _mean(values) -> float | None:
    values = list(values)
    return sum(values) / len(values) if values else None


def format_table(rows: list[BenchRow]) -> str:
    """Text table with bracketed float percentages and init call counts."""
    header = (f"{'size':>8} | {'|Y_SN1|':>9} | "
              + " | ".join(f"{v + ' calls':>24}" for v in VARIANTS)
              + " | " + " | ".join(f"{v + ' t(s)':>12}" for v in VARIANTS))
    lines = [header, "-" * len(header)]
    for row in rows:
        cells = [f"{row.size:>8}",
                 f"{row.mean_ysn1:>9.1f}" if row.mean_ysn1 is not None else f"{'x':>9}"]
        for v in VARIANTS:
            if v not in row.mean_calls:
                cells.append(f"{'x':>24}")
                continue
            text = f"{row.mean_calls[v]:.1f} ({row.mean_float_pct[v]:.1f}%)"
            if v.startswith("v2"):
                text += f" [{row.mean_init_calls[v]:.1f}]"
            cells.append(f"{text:>24}")
        for v in VARIANTS:
            if v not in row.mean_time:
                cells.append(f"{'x':>12}")
            else:
                cells.append(f"{row.mean_time[v]:>12.3f}")
        lines.append(" | ".join(cells))
    return "\n".join(lines) + "\n"


def rows_to_json(rows: list[BenchRow]) -> str:
    return json.dumps([r.to_json() for r in rows], indent=2) + "\n"
