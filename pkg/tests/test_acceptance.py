"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines as they
complete.  The equivalence suite (criteria 3-5) runs once and is shared.
"""

import random
import time

import pytest

from paretohull.engine import bd_dichotomy, dummy_dichotomy
from paretohull.files import generate
from paretohull.geometry import HullState
from paretohull.oracle import enumerate_outcomes, oracle_ysn1
from paretohull.solvers import RunStats, canonicalize, weighted_sum_solve

from conftest import (
    EXAMPLE_DOMINATED,
    EXAMPLE_FRONTIER,
    EXAMPLE_Y1,
    EXAMPLE_Y2,
    EXAMPLE_Y3,
    canonical_set,
)
from _oracles import hull_vertices_naive

# instance families: (kind, objectives, sizes, seeds per size)
EQUIVALENCE_FAMILIES = [
    ("ap", 3, [4, 5, 6, 7], 15),
    ("ap", 4, [4, 5, 6], 17),
    ("kp", 3, list(range(8, 17)), 6),
    ("kp", 4, list(range(8, 15)), 6),
]


def report(name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f"  ({detail})" if detail else ""
    print(f"[acceptance] {name}: {status}{suffix}")


@pytest.fixture(scope="module")
def equivalence_run():
    """One exact-mode pass over every suite instance, results shared below."""
    failures = []
    bad_weights = []
    ap_float_calls = 0
    instances = 0
    start = time.perf_counter()
    for kind, p, sizes, per_size in EQUIVALENCE_FAMILIES:
        for n in sizes:
            for idx in range(per_size):
                seed = 100_000 * p + 1_000 * n + idx
                inst = canonicalize(generate(kind, p, n, seed))
                truth = set(oracle_ysn1(enumerate_outcomes(inst)))
                instances += 1
                for runner, name in ((dummy_dichotomy, "dummy"),
                                     (bd_dichotomy, "bd")):
                    result = runner(inst, "exact", record_weights=True)
                    got = canonical_set(inst, result.points)
                    if got != truth:
                        failures.append((kind, p, n, seed, name,
                                         sorted(truth ^ got)))
                    for weight in result.main_loop_weights:
                        if not all(c > 0 for c in weight):
                            bad_weights.append((kind, p, n, seed, name, weight))
                    if kind == "ap":
                        ap_float_calls += result.stats.float_calls
    elapsed = time.perf_counter() - start
    return {
        "instances": instances,
        "failures": failures,
        "bad_weights": bad_weights,
        "ap_float_calls": ap_float_calls,
        "elapsed": elapsed,
    }


def test_criterion_1_example_regression(example_instance):
    start = time.perf_counter()
    dummy = dummy_dichotomy(example_instance, "exact")
    bd = bd_dichotomy(example_instance, "exact")
    elapsed = time.perf_counter() - start
    dummy_set = {op.y for op in dummy.points}
    bd_set = {op.y for op in bd.points}
    ok = (dummy_set == EXAMPLE_FRONTIER == bd_set
          and EXAMPLE_DOMINATED not in dummy_set | bd_set
          and elapsed < 0.1)
    report("example regression (both algorithms, exact)", ok,
           f"{elapsed * 1000:.1f} ms")
    assert dummy_set == EXAMPLE_FRONTIER
    assert bd_set == EXAMPLE_FRONTIER
    assert elapsed < 0.1


def test_criterion_2_naive_dichotomy_failure(example_instance):
    stats = RunStats()
    down = weighted_sum_solve(example_instance, (1, -40, -28), stats)
    up = weighted_sum_solve(example_instance, (-1, 40, 28), stats)
    ok = (down.y == EXAMPLE_DOMINATED
          and up.y in {EXAMPLE_Y1, EXAMPLE_Y2, EXAMPLE_Y3})
    report("naive-dichotomy failure reproduction", ok,
           f"mixed-sign weight found {down.y}")
    assert down.y == EXAMPLE_DOMINATED
    assert up.y in {EXAMPLE_Y1, EXAMPLE_Y2, EXAMPLE_Y3}


def test_criterion_3_oracle_equivalence(equivalence_run):
    run = equivalence_run
    ok = (run["instances"] >= 200 and not run["failures"]
          and run["elapsed"] < 300.0)
    report("oracle equivalence suite", ok,
           f"{run['instances']} instances, {len(run['failures'])} failures, "
           f"{run['elapsed']:.1f} s")
    assert run["instances"] >= 200
    assert run["failures"] == []
    assert run["elapsed"] < 300.0


def test_criterion_4_positive_weights(equivalence_run):
    bad = equivalence_run["bad_weights"]
    report("strictly positive main-loop weights", not bad,
           f"{len(bad)} violations")
    assert bad == []


def test_criterion_5_exact_ap_float_freedom(equivalence_run):
    calls = equivalence_run["ap_float_calls"]
    report("exact assignment runs never use the float solver", calls == 0,
           f"{calls} float calls")
    assert calls == 0


def test_criterion_6_hull_correctness():
    configs = [(2, 25, 70), (3, 25, 70), (4, 12, 60)]
    checked = 0
    mismatches = 0
    euler_bad = 0
    for dim, max_points, sets in configs:
        for series in range(sets):
            rng = random.Random(7_700_000 + 1000 * dim + series)
            count = rng.randint(dim + 2, max_points)
            pts = [tuple(rng.randint(0, 100) for _ in range(dim))
                   for _ in range(count)]
            hull = HullState(dim, "exact")
            for q in pts:
                hull.insert(q)
            hull.validate()
            if hull.vertex_coords() != hull_vertices_naive(pts):
                mismatches += 1
            if dim == 3:
                v = len(hull.vertex_ids)
                if v - hull.ridge_count + hull.facet_count != 2:
                    euler_bad += 1
            checked += 1
    ok = checked >= 200 and mismatches == 0 and euler_bad == 0
    report("incremental hull matches naive oracle", ok,
           f"{checked} point sets, {mismatches} mismatches, "
           f"{euler_bad} Euler violations")
    assert checked >= 200
    assert mismatches == 0
    assert euler_bad == 0


def test_criterion_7_desk_scale_performance():
    inst = canonicalize(generate("ap", 3, 30, 314159))
    start = time.perf_counter()
    exact = dummy_dichotomy(inst, "exact")
    exact_time = time.perf_counter() - start
    start = time.perf_counter()
    dummy_dichotomy(inst, "float")
    float_time = time.perf_counter() - start
    points = exact.stats.extreme_points_found
    calls = exact.stats.solver_calls
    ok = (exact_time < 60.0 and float_time < 20.0
          and calls <= 3 * (points * 4))
    report("desk-scale performance (3AP 30x30)", ok,
           f"exact {exact_time:.1f}s, float {float_time:.1f}s, "
           f"{calls} calls for {points} points")
    assert exact_time < 60.0
    assert float_time < 20.0
    assert calls <= 3 * (points * 4)


def test_criterion_8_paper_scale_magnitudes():
    sizes = []
    ratios = []
    for idx in range(10):
        inst = canonicalize(generate("ap", 3, 10, 555_000 + idx))
        result = bd_dichotomy(inst, "exact")
        sizes.append(result.stats.extreme_points_found)
        ratios.append(result.stats.solver_calls
                      / result.stats.extreme_points_found)
    mean_size = sum(sizes) / len(sizes)
    mean_ratio = sum(ratios) / len(ratios)
    ok = 15 <= mean_size <= 75 and 2 <= mean_ratio <= 5
    report("paper-scale magnitudes (3AP 10x10)", ok,
           f"mean |Y_SN1| {mean_size:.1f}, mean calls per point {mean_ratio:.2f}")
    assert 15 <= mean_size <= 75
    assert 2 <= mean_ratio <= 5
