"""Dichotomic enumeration of nondominated extreme points.

Three related searches over the outcome set of a canonical instance, all
driven by the same primitive: maintain the convex hull of the points found so
far, read scalarization weights off unexplored facet normals, and solve the
weighted-sum problem to either confirm the facet (optimal value equals the
facet offset) or discover a new hull vertex.

* ``inflate_balloon``: explores every facet, whatever the sign of its normal,
  and returns every vertex of the outcome set's hull.  Mainly a baseline.
* ``dummy_dichotomy``: seeds the hull with one supported point plus p huge
  axis dummy points M*e_q.  Every facet of that hull except the all-dummy one
  has a strictly positive inward normal, so the search only ever solves
  scalarizations with positive weights.
* ``bd_dichotomy``: seeds with the extreme points of all lower-dimensional
  objective-subset subproblems (solved bottom-up, memoized, via big-M
  composite weights) and then explores only facets with strictly positive
  normals.

Bi-objective (sub)problems use the classical two-point dichotomic scheme
directly; it is the natural degenerate case of the facet search and avoids
bootstrapping a full-dimensional hull from two points.
"""

from __future__ import annotations

import logging
import time
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from math import factorial
from typing import Callable, Iterable, Sequence

from .geometry import (
    HullState,
    InsertOutcome,
    facet_weight,
    is_nondominated_facet,
)
from .numerics import AffineBasis, dot, gcd_reduce
from .solvers import (
    Instance,
    OutcomePoint,
    RunStats,
    Weight,
    subproblem_weight,
    weighted_sum_solve,
)

log = logging.getLogger(__name__)


class DegenerateOutcomeSetError(RuntimeError):
    """The outcome set does not span full dimension and no probe fixed it."""


class EngineInvariantError(RuntimeError):
    """An internal invariant failed; carries the offending weight and facet."""

    def __init__(self, message: str, weight=None, facet=None):
        detail = message
        if weight is not None:
            detail += f" (weight={weight}"
            if facet is not None:
                detail += f", facet vertices={facet.vertex_ids}"
            detail += ")"
        super().__init__(detail)
        self.weight = weight
        self.facet = facet


@dataclass(frozen=True)
class DummyConfig:
    m: int
    dummy_points: tuple[tuple, ...]


@dataclass(frozen=True)
class FrontierResult:
    """Claimed nondominated extreme points, reported in the original sense."""
    points: tuple[OutcomePoint, ...]
    stats: RunStats
    facet_certificates: tuple = ()
    algorithm: str = ""
    warnings: tuple[str, ...] = ()
    main_loop_weights: tuple = ()


def _safe_dummy_magnitude(dim: int, bound: int) -> int:
    """Dummy coordinate provably preserving every extreme point.

    Each extreme point owns a full-dimensional cell of optimal normalized
    weights whose vertices are ratios of integer determinants built from
    outcome differences, so some cell point has all components at least
    1 / (dim * dim! * bound^(dim-1)).  A dummy magnitude above
    bound / that floor keeps the point strictly separable from the other
    points and the dummies; doubling covers the mix into the cell interior.
    """
    return 1 + 2 * dim * factorial(dim) * bound ** dim


def make_dummies(inst: Instance, y0: OutcomePoint) -> DummyConfig:
    """Axis dummy points M*e_q large enough to preserve extreme points.

    M also exceeds sum(y0), so y0 plus the p dummies span full dimension.
    """
    bound = inst.objective_bound()
    m = _safe_dummy_magnitude(inst.p, bound)
    m = max(m, 1 + sum(y0.y))
    dummies = tuple(tuple(m if k == q else 0 for k in range(inst.p))
                    for q in range(inst.p))
    return DummyConfig(m, dummies)


def final_filter(points: Iterable[OutcomePoint]) -> list[OutcomePoint]:
    """Keep exactly the nondominated extreme points of a canonical point set.

    Rebuilds an exact hull of the set plus fresh dummy points, keeps non-dummy
    vertices, then drops anything dominated by another kept point.  Outcome
    vectors are integers in every arithmetic mode, so this filter is exact.
    """
    by_vector: dict[tuple, OutcomePoint] = {}
    for op in points:
        by_vector.setdefault(tuple(op.y), op)
    if not by_vector:
        raise ValueError("final_filter: empty point set")
    vectors = sorted(by_vector)
    kept = _extreme_nondominated(vectors)
    return [by_vector[v] for v in kept]


def _extreme_nondominated(vectors: Sequence[tuple]) -> list[tuple]:
    """Nondominated extreme vectors of an integer point set (exact)."""
    dim = len(vectors[0])
    if len(vectors) == 1:
        return list(vectors)
    bound = max(max(v) for v in vectors)
    m = _safe_dummy_magnitude(dim, bound)
    hull = HullState(dim, "exact")
    for v in vectors:
        hull.insert(v)
    dummy_coords = {tuple(m if k == q else 0 for k in range(dim)) for q in range(dim)}
    for coords in sorted(dummy_coords):
        hull.insert(coords)
    if hull.is_full_dimensional:
        candidates = sorted(c for c in hull.vertex_coords() if c not in dummy_coords)
    else:
        # fewer than dim+1 affinely independent points even with dummies
        # cannot happen (any point plus the dummies spans), defensive only
        candidates = list(vectors)
    return [v for v in candidates
            if not any(_dominates(w, v) for w in candidates if w != v)]


def _dominates(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b)) and tuple(a) != tuple(b)


# ----------------------------------------------------------------------
# shared machinery


@dataclass
class _RunConfig:
    inst: Instance
    stats: RunStats
    float_mode: bool
    tolerance: float
    eps_positive: float
    recorder: list | None = None   # solved main-loop weights, when requested


def _solver(cfg: _RunConfig, subset: tuple[int, ...], count_init: bool
            ) -> Callable[[Weight], tuple[OutcomePoint, tuple]]:
    """Weighted-sum solver for a subset-space weight; returns (full, projection)."""
    free = tuple(k for k in range(cfg.inst.p) if k not in subset)

    def solve(lam_sub: Weight):
        full_weight = subproblem_weight(lam_sub, subset, cfg.inst, free,
                                        cfg.stats, cfg.float_mode)
        point = weighted_sum_solve(cfg.inst, full_weight, cfg.stats, cfg.float_mode)
        if count_init:
            cfg.stats.init_solver_calls += 1
        elif cfg.recorder is not None:
            cfg.recorder.append(full_weight)
        proj = tuple(point.y[k] for k in subset)
        return point, proj

    return solve


def _values_equal(v, offset, cfg: _RunConfig) -> bool:
    if not cfg.float_mode:
        return v == offset
    return v >= offset - cfg.tolerance * (1.0 + abs(offset))


class _HullSearch:
    """One facet-exploration loop over a (projected) outcome space."""

    def __init__(self, dim: int, cfg: _RunConfig, solve, *, policy: str,
                 collect_certificates: bool = False):
        mode = "float" if cfg.float_mode else "exact"
        self.hull = HullState(dim, mode, eps_positive=cfg.eps_positive)
        self.dim = dim
        self.cfg = cfg
        self.solve = solve
        self.policy = policy  # require_positive | skip_nonpositive | solve_all
        self.collect_certificates = collect_certificates
        self.certificates: list[tuple[Weight, object]] = []
        self.full_by_proj: dict[tuple, OutcomePoint] = {}
        self.dummy_coords: set[tuple] = set()
        self._solved_values: dict[Weight, object] = {}
        self._confirmed: set[Weight] = set()
        self._log_cursor = 0

    def add_point(self, point: OutcomePoint, proj: tuple) -> InsertOutcome:
        self.full_by_proj.setdefault(proj, point)
        return self.hull.insert(proj)

    def add_dummies(self, m) -> None:
        for q in range(self.dim):
            coords = tuple(m if k == q else 0 for k in range(self.dim))
            self.dummy_coords.add(coords)
            self.hull.insert(coords)

    def _dummy_ids(self) -> frozenset:
        return frozenset(self.hull.point_id(c) for c in self.dummy_coords)

    def run(self) -> None:
        if not self.hull.is_full_dimensional:
            raise DegenerateOutcomeSetError("search started on a lower-dimensional hull")
        exact = not self.cfg.float_mode
        excluded = self._dummy_ids() if self.dummy_coords else frozenset()
        queue: deque[int] = deque()
        self._sync_queue(queue)
        while queue:
            fid = queue.popleft()
            facet = self.hull.facets.get(fid)
            if facet is None or facet.explored:
                continue
            if excluded and frozenset(facet.vertex_ids) == excluded:
                continue  # the all-dummy facet is never explored
            mode = self.hull.mode
            weight = facet_weight(facet, mode)
            positive = is_nondominated_facet(facet, mode, self.cfg.eps_positive)
            if not positive:
                if self.policy == "skip_nonpositive":
                    continue
                if self.policy == "require_positive":
                    raise EngineInvariantError(
                        "dominated facet selected in dummy search", weight, facet)
            if exact and weight in self._confirmed:
                prior = self._solved_values[weight]
                if prior != facet.offset:
                    raise EngineInvariantError(
                        "confirmed weight reappeared with a different support value",
                        weight, facet)
                self.hull.mark_explored(fid)
                continue
            point, proj = self.solve(weight)
            value = dot(weight, proj)
            if exact and value > facet.offset:
                raise EngineInvariantError(
                    "weighted-sum optimum above its own facet", weight, facet)
            if _values_equal(value, facet.offset, self.cfg):
                self.hull.mark_explored(fid)
                if exact:
                    if weight in self._solved_values and self._solved_values[weight] != value:
                        raise EngineInvariantError(
                            "weight re-solved with inconsistent optimal value",
                            weight, facet)
                    self._solved_values[weight] = value
                    self._confirmed.add(weight)
                if self.collect_certificates and positive:
                    self.certificates.append((weight, value))
                continue
            # strictly better point: grow the hull
            outcome = self.add_point(point, proj)
            if exact:
                if self._solved_values.get(weight, value) != value:
                    raise EngineInvariantError(
                        "weight re-solved with inconsistent optimal value", weight, facet)
                self._solved_values[weight] = value
                if outcome is not InsertOutcome.NEW_VERTEX:
                    raise EngineInvariantError(
                        "improving point was not a new hull vertex", weight, facet)
            elif outcome is not InsertOutcome.NEW_VERTEX:
                self.hull.mark_explored(fid)  # numerically flat; stop revisiting
                continue
            queue.append(fid)  # the facet may be gone; re-check handles it
            self._sync_queue(queue)
        self._check_termination()

    def _sync_queue(self, queue: deque) -> None:
        logbook = self.hull.facet_log
        while self._log_cursor < len(logbook):
            queue.append(logbook[self._log_cursor])
            self._log_cursor += 1

    def _check_termination(self) -> None:
        if self.policy != "require_positive":
            return
        excluded = self._dummy_ids() if self.dummy_coords else frozenset()
        for facet in self.hull.unexplored_facets():
            if frozenset(facet.vertex_ids) != excluded:
                raise EngineInvariantError("unexplored facet left behind",
                                           facet.normal, facet)

    def frontier_vectors(self) -> list[tuple]:
        coords = [c for c in self.hull.vertex_coords() if c not in self.dummy_coords]
        return sorted(coords)


def _classic_biobjective(cfg: _RunConfig, subset: tuple[int, int], solve,
                         candidates: Sequence[OutcomePoint], *,
                         collect_certificates: bool = False
                         ) -> tuple[list[OutcomePoint], list]:
    """Classical two-objective dichotomic scheme over a projected space.

    Endpoints are minimizers of each objective of the pair (their projections
    may be weakly dominated representatives; they are replaced as soon as a
    strictly better point shows up, which restores the true lexicographic
    corners).
    """
    a, b = subset
    proj = lambda y: (y[a], y[b])
    certificates: list = []
    first = min(candidates, key=lambda op: (op.y[a], op.y[b]))
    second = min(candidates, key=lambda op: (op.y[b], op.y[a]))
    pa, pb = proj(first.y), proj(second.y)
    found: dict[tuple, OutcomePoint] = {}
    if pa == pb:
        return [first], certificates
    if _dominates(pa, pb):
        return [first], certificates
    if _dominates(pb, pa):
        return [second], certificates
    found[pa] = first
    found[pb] = second
    segments: deque[tuple[tuple, tuple]] = deque([(pa, pb)])
    while segments:
        left, right = segments.popleft()
        lam = gcd_reduce((left[1] - right[1], right[0] - left[0]))
        point, proj_full = solve(lam)
        t = (proj_full[0], proj_full[1])
        value = dot(lam, t)
        ref = dot(lam, left)
        if not cfg.float_mode and value > ref:
            raise EngineInvariantError("optimum above the segment it refines", lam)
        if _values_equal(value, ref, cfg) or t in found:
            if collect_certificates:
                certificates.append((lam, ref))
            continue
        if _dominates(t, left) or t == left:
            found.pop(left, None)
            found[t] = point
            segments.append((t, right))
        elif _dominates(t, right) or t == right:
            found.pop(right, None)
            found[t] = point
            segments.append((left, t))
        else:
            found[t] = point
            segments.append((left, t))
            segments.append((t, right))
    ordered = sorted(found)
    return [found[key] for key in ordered], certificates


# ----------------------------------------------------------------------
# public algorithms


def inflate_balloon(inst: Instance, init: Sequence[OutcomePoint],
                    arithmetic: str = "exact", tolerance: float = 1e-7,
                    eps_positive: float = 1e-12) -> FrontierResult:
    """Enumerate every vertex of the outcome set's convex hull.

    Explores all facets regardless of normal sign, so dominated vertices are
    found too (and kept: the point of this variant is the full hull).
    Requires an initial point set of full affine dimension.
    """
    stats = RunStats()
    start = time.perf_counter()
    cfg = _RunConfig(inst, stats, arithmetic == "float", tolerance, eps_positive)
    subset = tuple(range(inst.p))
    search = _HullSearch(inst.p, cfg, _solver(cfg, subset, count_init=False),
                         policy="solve_all", collect_certificates=True)
    for op in init:
        search.add_point(op, tuple(op.y))
    if not search.hull.is_full_dimensional:
        raise DegenerateOutcomeSetError(
            "initial points do not span full dimension")
    search.run()
    vectors = search.frontier_vectors()
    points = tuple(_to_original(inst, search.full_by_proj[v]) for v in vectors)
    stats.extreme_points_found = len(points)
    stats.wall_time = time.perf_counter() - start
    certs = tuple((w, v) for w, v in search.certificates)
    return FrontierResult(points, stats, certs, algorithm="balloon")


def lexicographic_seed(inst: Instance, stats: RunStats,
                       float_mode: bool = False) -> list[OutcomePoint]:
    """Full-dimensional seed: the p lexicographic optima plus span probes.

    While the collected outcomes stay affinely dependent, the normal of a
    hyperplane containing their span is probed in both directions; if neither
    direction improves on the span, the whole outcome set lies in it and the
    search cannot proceed.
    """
    cfg = _RunConfig(inst, stats, float_mode, 1e-7, 1e-12)
    seed: list[OutcomePoint] = []
    basis = AffineBasis(inst.p, mode="exact")
    seen: set[tuple] = set()

    def absorb(point: OutcomePoint) -> None:
        if tuple(point.y) not in seen:
            seen.add(tuple(point.y))
            seed.append(point)
            basis.try_extend(point.y)

    for k in range(inst.p):
        solve = _solver(cfg, (k,), count_init=False)
        point, _ = solve((1,))
        absorb(point)
    full = _solver(cfg, tuple(range(inst.p)), count_init=False)
    while not basis.is_full:
        normal = basis.span_normal()
        progressed = False
        for candidate in (normal, tuple(-c for c in normal)):
            point, proj = full(candidate)
            best_known = min(dot(candidate, y) for y in seen)
            if dot(candidate, proj) < best_known:
                absorb(point)
                progressed = True
                break
        if not progressed:
            raise DegenerateOutcomeSetError(
                "outcome set is not full-dimensional; hull search cannot run")
    return seed


def dummy_dichotomy(inst: Instance, arithmetic: str = "exact", *,
                    tolerance: float = 1e-7, eps_positive: float = 1e-12,
                    record_weights: bool = False) -> FrontierResult:
    """Enumerate nondominated extreme points with dummy-point initialization."""
    stats = RunStats()
    start = time.perf_counter()
    recorder: list | None = [] if record_weights else None
    cfg = _RunConfig(inst, stats, arithmetic == "float", tolerance, eps_positive,
                     recorder)
    subset = tuple(range(inst.p))
    solve = _solver(cfg, subset, count_init=False)
    y0, proj0 = solve(tuple(1 for _ in range(inst.p)))
    search, warnings = _dummy_style_search(cfg, subset, [(y0, proj0)])
    points, certs = _assemble(inst, search)
    stats.extreme_points_found = len(points)
    stats.wall_time = time.perf_counter() - start
    return FrontierResult(points, stats, certs, algorithm="dummy",
                          warnings=tuple(warnings),
                          main_loop_weights=tuple(recorder) if recorder else ())


def _dummy_style_search(cfg: _RunConfig, subset: tuple[int, ...],
                        seeded: Sequence[tuple[OutcomePoint, tuple]]
                        ) -> tuple[_HullSearch, list[str]]:
    dim = len(subset)
    solve = _solver(cfg, subset, count_init=subset != tuple(range(cfg.inst.p)))
    policy = "require_positive" if not cfg.float_mode else "solve_all"
    search = _HullSearch(dim, cfg, solve, policy=policy,
                         collect_certificates=True)
    bound = cfg.inst.objective_bound()
    m = _safe_dummy_magnitude(dim, bound)
    m = max(m, 1 + max(sum(proj) for _, proj in seeded))
    for point, proj in seeded:
        search.add_point(point, proj)
    search.add_dummies(m)
    if not search.hull.is_full_dimensional:
        raise EngineInvariantError("dummy seed failed to span full dimension")
    search.run()
    return search, []


def bd_dichotomy(inst: Instance, arithmetic: str = "exact", *,
                 tolerance: float = 1e-7, eps_positive: float = 1e-12,
                 record_weights: bool = False) -> FrontierResult:
    """Enumerate nondominated extreme points with boundary-subproblem seeding.

    Subproblems over every objective subset of size 1..p-1 are solved in
    increasing size order and memoized; the size-(p-1) results seed the main
    search, which only explores facets with strictly positive normals.
    """
    stats = RunStats()
    start = time.perf_counter()
    recorder: list | None = [] if record_weights else None
    cfg = _RunConfig(inst, stats, arithmetic == "float", tolerance, eps_positive,
                     recorder)
    warnings: list[str] = []
    memo: dict[tuple[int, ...], list[OutcomePoint]] = {}
    for k in range(inst.p):
        solve = _solver(cfg, (k,), count_init=True)
        point, _ = solve((1,))
        memo[(k,)] = [point]
    for size in range(2, inst.p):
        for subset in combinations(range(inst.p), size):
            init = _merge_memo(memo, subset)
            memo[subset] = _subset_frontier(cfg, subset, init, warnings)
    top = tuple(range(inst.p))
    init = _merge_memo(memo, top)
    if inst.p == 2:
        solve = _solver(cfg, top, count_init=False)
        points, certs = _classic_biobjective(cfg, top, solve, init,
                                             collect_certificates=True)
        kept = final_filter(points)
        original = _sorted_original(inst, kept)
        stats.extreme_points_found = len(original)
        stats.wall_time = time.perf_counter() - start
        return FrontierResult(original, stats, tuple(certs), algorithm="bd",
                              warnings=tuple(warnings),
                              main_loop_weights=tuple(recorder) if recorder else ())
    solve = _solver(cfg, top, count_init=False)
    search = _HullSearch(inst.p, cfg, solve, policy="skip_nonpositive",
                         collect_certificates=True)
    for op in init:
        search.add_point(op, tuple(op.y))
    # span probing is part of the initialization, bookkeeping included
    if not _span_probes(search, _solver(cfg, top, count_init=True)):
        message = ("outcome set is lower-dimensional; falling back to "
                   "dummy-point initialization")
        log.warning(message)
        warnings.append(message)
        seeded = [(search.full_by_proj[tuple(c)], tuple(c))
                  for c in search.hull.points]
        search, _ = _dummy_style_search(cfg, top, seeded)
    else:
        search.run()
    points, certs = _assemble(inst, search)
    stats.extreme_points_found = len(points)
    stats.wall_time = time.perf_counter() - start
    return FrontierResult(points, stats, certs, algorithm="bd",
                          warnings=tuple(warnings),
                          main_loop_weights=tuple(recorder) if recorder else ())


def _span_probes(search: _HullSearch, solve) -> bool:
    """Probe normals of the seed's affine span until the hull spans, if it can.

    Each round solves the span normal in both orientations; an optimum
    strictly below the span raises the rank by one.  Returns False when
    neither direction improves, i.e. the projected outcome set itself is
    lower-dimensional and a dummy-point search is required.
    """
    while not search.hull.is_full_dimensional:
        points = list(search.hull.points)
        basis = AffineBasis(search.dim, mode="exact")
        for coords in points:
            basis.try_extend(coords)
        normal = basis.span_normal()
        progressed = False
        for candidate in (normal, tuple(-c for c in normal)):
            point, proj = solve(candidate)
            best_known = min(dot(candidate, q) for q in points)
            if dot(candidate, proj) < best_known:
                search.add_point(point, proj)
                progressed = True
                break
        if not progressed:
            return False
    return True


def _merge_memo(memo: dict, subset: tuple[int, ...]) -> list[OutcomePoint]:
    merged: dict[tuple, OutcomePoint] = {}
    for drop in range(len(subset)):
        child = subset[:drop] + subset[drop + 1:]
        for op in memo[child]:
            merged.setdefault(tuple(op.y), op)
    return list(merged.values())


def _subset_frontier(cfg: _RunConfig, subset: tuple[int, ...],
                     init: Sequence[OutcomePoint],
                     warnings: list[str]) -> list[OutcomePoint]:
    """Extreme points of one objective-subset subproblem (full-space reps)."""
    solve = _solver(cfg, subset, count_init=True)
    if len(subset) == 2:
        points, _ = _classic_biobjective(cfg, subset, solve, init)
        return points
    search = _HullSearch(len(subset), cfg, solve, policy="skip_nonpositive")
    for op in init:
        search.add_point(op, tuple(op.y[k] for k in subset))
    if not _span_probes(search, solve):
        message = (f"objective subset {subset} has a lower-dimensional outcome "
                   "set; using dummy-point initialization for it")
        log.warning(message)
        warnings.append(message)
        seeded = [(search.full_by_proj[tuple(c)], tuple(c))
                  for c in search.hull.points]
        search, _ = _dummy_style_search(cfg, subset, seeded)
    else:
        search.run()
    vectors = search.frontier_vectors()
    kept = _extreme_nondominated(vectors) if vectors else []
    return [search.full_by_proj[v] for v in kept]


def _assemble(inst: Instance, search: _HullSearch
              ) -> tuple[tuple[OutcomePoint, ...], tuple]:
    vectors = search.frontier_vectors()
    kept = final_filter([search.full_by_proj[v] for v in vectors])
    return _sorted_original(inst, kept), tuple(search.certificates)


def _sorted_original(inst: Instance, points: Iterable[OutcomePoint]
                     ) -> tuple[OutcomePoint, ...]:
    mapped = [_to_original(inst, op) for op in points]
    return tuple(sorted(mapped, key=lambda op: op.y))


def _to_original(inst: Instance, op: OutcomePoint) -> OutcomePoint:
    return OutcomePoint(inst.to_original(op.y), op.solution)
