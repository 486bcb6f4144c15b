"""Single-objective weighted-sum oracles for assignment and knapsack problems.

Instances are canonicalized to minimization with strictly positive outcomes:
assignment costs are shifted by +1 when any entry is zero, and knapsack
(maximization) objectives are reflected per objective k to ``U_k - y_k`` with
``U_k = 1 + sum(profits_k)``.  The inverse transforms are stored so results
can be reported in the original problem sense.

Weighted-sum problems are solved exactly on arbitrary-precision integers: the
Hungarian algorithm for assignment (after a uniform shift when aggregated
costs go negative) and a capacity-indexed dynamic program for knapsack.  The
float pathway runs the same algorithms on 64-bit floats and exists for parity
measurements; exact mode never uses it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .numerics import gcd_reduce

Weight = tuple  # scalarization direction; ints in exact mode, floats otherwise

KIND_ASSIGNMENT = "ap"
KIND_KNAPSACK = "kp"

# above this, float aggregation can no longer represent weights exactly
FLOAT_SAFE_MAGNITUDE = 2.0 ** 52


class InstanceError(ValueError):
    """Raised for structurally invalid problem data."""


@dataclass(frozen=True)
class RawProblem:
    """A parsed problem exactly as stated in its file (original sense)."""
    kind: str
    p: int
    n: int
    objectives: tuple  # ap: p matrices (n x n); kp: p profit vectors
    weights: tuple = ()     # kp only
    capacity: int = 0       # kp only


@dataclass(frozen=True)
class OutcomePoint:
    """Canonical-space image of one feasible solution."""
    y: tuple[int, ...]
    solution: tuple = field(default=None, compare=False)


@dataclass(frozen=True)
class Instance:
    """Canonical minimization form of a problem plus its inverse transform."""
    kind: str
    p: int
    n: int
    objectives: tuple           # canonical minimization coefficients
    weights: tuple = ()
    capacity: int = 0
    ap_shift: int = 0           # 1 if assignment costs were shifted by +1
    kp_offsets: tuple = ()      # U_k per objective for knapsack

    def outcome(self, solution: tuple) -> OutcomePoint:
        """Canonical outcome vector of a feasible solution."""
        if self.kind == KIND_ASSIGNMENT:
            y = tuple(sum(mat[i][solution[i]] for i in range(self.n))
                      for mat in self.objectives)
        else:
            chosen = set(solution)
            y = tuple(u - sum(prof[i] for i in chosen)
                      for u, prof in zip(self.kp_offsets, self._original_profits))
        return OutcomePoint(y, solution)

    @property
    def _original_profits(self) -> tuple:
        # canonical kp objectives are the original profits (the reflection
        # happens in the offsets), reuse them directly
        return self.objectives

    def to_original(self, y: Sequence[int]) -> tuple[int, ...]:
        if self.kind == KIND_ASSIGNMENT:
            return tuple(v - self.ap_shift * self.n for v in y)
        return tuple(u - v for u, v in zip(self.kp_offsets, y))

    def objective_bound(self) -> int:
        """Upper bound B on any canonical objective component over X."""
        if self.kind == KIND_ASSIGNMENT:
            top = max(max(max(row) for row in mat) for mat in self.objectives)
            return self.n * top
        return max(self.kp_offsets)


@dataclass
class RunStats:
    """Counters accumulated over one enumeration run."""
    solver_calls: int = 0
    float_calls: int = 0
    extreme_points_found: int = 0
    init_solver_calls: int = 0
    wall_time: float = 0.0
    unreliable_weight_events: int = 0


def canonicalize(raw: RawProblem) -> Instance:
    """Validate raw data and bring it to canonical minimization form."""
    if raw.kind not in (KIND_ASSIGNMENT, KIND_KNAPSACK):
        raise InstanceError(f"unknown problem kind {raw.kind!r}")
    if raw.p < 2 or raw.p > 5:
        raise InstanceError(f"objective count {raw.p} outside supported range 2..5")
    if raw.n < 1:
        raise InstanceError("size must be at least 1")
    if raw.kind == KIND_ASSIGNMENT:
        if len(raw.objectives) != raw.p:
            raise InstanceError("wrong number of objective matrices")
        for mat in raw.objectives:
            if len(mat) != raw.n or any(len(row) != raw.n for row in mat):
                raise InstanceError("objective matrix is not n x n")
            for row in mat:
                for c in row:
                    if not isinstance(c, int) or c < 0:
                        raise InstanceError(f"assignment cost {c!r} is not a non-negative integer")
        shift = 1 if any(c == 0 for mat in raw.objectives for row in mat for c in row) else 0
        objectives = tuple(tuple(tuple(c + shift for c in row) for row in mat)
                           for mat in raw.objectives)
        return Instance(KIND_ASSIGNMENT, raw.p, raw.n, objectives, ap_shift=shift)

    if len(raw.objectives) != raw.p:
        raise InstanceError("wrong number of profit vectors")
    for prof in raw.objectives:
        if len(prof) != raw.n:
            raise InstanceError("profit vector length mismatch")
        for c in prof:
            if not isinstance(c, int) or c < 0:
                raise InstanceError(f"profit {c!r} is not a non-negative integer")
    if len(raw.weights) != raw.n:
        raise InstanceError("weight vector length mismatch")
    for w in raw.weights:
        if not isinstance(w, int) or w < 1:
            raise InstanceError(f"item weight {w!r} is not a positive integer")
    if not isinstance(raw.capacity, int) or raw.capacity < 1:
        raise InstanceError(f"capacity {raw.capacity!r} is not a positive integer")
    offsets = tuple(1 + sum(prof) for prof in raw.objectives)
    return Instance(KIND_KNAPSACK, raw.p, raw.n, tuple(tuple(p) for p in raw.objectives),
                    weights=tuple(raw.weights), capacity=raw.capacity, kp_offsets=offsets)


def to_raw(inst: Instance) -> RawProblem:
    """Original-sense problem data (inverse of canonicalize, field-exact)."""
    if inst.kind == KIND_ASSIGNMENT:
        objectives = tuple(tuple(tuple(c - inst.ap_shift for c in row) for row in mat)
                           for mat in inst.objectives)
        return RawProblem(inst.kind, inst.p, inst.n, objectives)
    return RawProblem(inst.kind, inst.p, inst.n, inst.objectives,
                      weights=inst.weights, capacity=inst.capacity)


# ----------------------------------------------------------------------
# weighted-sum solving


def weighted_sum_solve(inst: Instance, lam: Weight, stats: RunStats,
                       float_mode: bool = False) -> OutcomePoint:
    """Optimal solution of min lam . z(x) over the canonical instance.

    Exact mode aggregates with arbitrary-precision integers; the float
    pathway (float_mode) aggregates in 64-bit floats and is counted in
    ``stats.float_calls``.  Ties are broken deterministically by the scan
    order of the underlying algorithm.
    """
    if not any(lam):
        raise ValueError("zero weight")
    stats.solver_calls += 1
    if float_mode:
        stats.float_calls += 1
        lam = tuple(float(c) for c in lam)
    if inst.kind == KIND_ASSIGNMENT:
        agg = [[sum(l * mat[i][j] for l, mat in zip(lam, inst.objectives))
                for j in range(inst.n)] for i in range(inst.n)]
        perm = hungarian(agg)
        return inst.outcome(tuple(perm))
    # knapsack: min over canonical == max aggregated original profit
    agg = [sum(l * prof[i] for l, prof in zip(lam, inst.objectives))
           for i in range(inst.n)]
    chosen = knapsack_max(agg, inst.weights, inst.capacity)
    return inst.outcome(tuple(chosen))


def hungarian(cost: Sequence[Sequence]) -> list[int]:
    """Minimum-cost perfect matching on a square matrix; row -> column map.

    Potentials-based O(n^3) algorithm; entries may be negative (a uniform
    shift makes them non-negative without changing the optimal matching).
    Exact on integers, also usable with floats.
    """
    n = len(cost)
    low = min(min(row) for row in cost)
    if low < 0:
        cost = [[c - low for c in row] for row in cost]
    big = None  # sentinel infinity handled explicitly
    u = [0] * (n + 1)
    v = [0] * (n + 1)
    match = [0] * (n + 1)   # match[j] = row assigned to column j (1-based)
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        match[0] = i
        j0 = 0
        minv = [big] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = match[j0]
            delta = big
            j1 = 0
            row = cost[i0 - 1]
            for j in range(1, n + 1):
                if used[j]:
                    continue
                cur = row[j - 1] - u[i0] - v[j]
                if minv[j] is None or cur < minv[j]:
                    minv[j] = cur
                    way[j] = j0
                if delta is None or minv[j] < delta:
                    delta = minv[j]
                    j1 = j
            for j in range(n + 1):
                if used[j]:
                    u[match[j]] += delta
                    v[j] -= delta
                elif minv[j] is not None:
                    minv[j] -= delta
            j0 = j1
            if match[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            match[j0] = match[j1]
            j0 = j1
    perm = [0] * n
    for j in range(1, n + 1):
        perm[match[j] - 1] = j - 1
    return perm


def knapsack_max(profit: Sequence, weights: Sequence[int], capacity: int) -> list[int]:
    """Chosen item indices maximizing total profit under the capacity.

    Classic capacity-indexed DP.  Items with non-positive aggregated profit
    are never taken (leaving them out is always feasible and optimal), which
    also copes with negative aggregated profits from mixed-sign weights.
    Ties prefer not taking an item, so the result is deterministic.
    """
    n = len(weights)
    active = [i for i in range(n) if profit[i] > 0 and weights[i] <= capacity]
    zero = 0 if not profit or isinstance(profit[0], int) else 0.0
    best = [zero] * (capacity + 1)
    take = []  # bitsets of taken rows per item, indexed by capacity
    for i in active:
        w, g = weights[i], profit[i]
        taken_row = bytearray(capacity + 1)
        for c in range(capacity, w - 1, -1):
            cand = best[c - w] + g
            if cand > best[c]:
                best[c] = cand
                taken_row[c] = 1
        take.append(taken_row)
    chosen = []
    c = capacity
    for idx in range(len(active) - 1, -1, -1):
        if take[idx][c]:
            chosen.append(active[idx])
            c -= weights[active[idx]]
    chosen.reverse()
    return chosen


def subproblem_weight(lam_sub: Weight, subset: Sequence[int], inst: Instance,
                      free_order: Sequence[int], stats: RunStats | None = None,
                      float_mode: bool = False) -> Weight:
    """Full-dimensional weight solving the subset-weighted problem exactly.

    Objectives in ``subset`` receive ``M^r * lam_sub`` and the remaining
    objectives (in ``free_order``) a lexicographic cascade M^(r-1), ..., 1,
    so the composite optimum solves the subset problem with lexicographic
    tie-breaking on the free objectives.  ``M = 1 + max|lam| * p * B`` with B
    the canonical objective bound, which strictly separates the levels.
    """
    if len(lam_sub) != len(subset) or not subset:
        raise ValueError("subset weight dimension mismatch")
    r = len(free_order)
    if set(subset) | set(free_order) != set(range(inst.p)):
        raise ValueError("subset and free objectives must partition the objective set")
    bound = inst.objective_bound()
    top = max(abs(c) for c in lam_sub)
    if float_mode:
        m = 1.0 + top * inst.p * bound
    else:
        m = 1 + top * inst.p * bound
    full = [0] * inst.p
    level = m ** r
    for k, c in zip(subset, lam_sub):
        full[k] = level * c
    for t, k in enumerate(free_order, start=1):
        full[k] = m ** (r - t)
    if float_mode:
        if stats is not None and max(abs(c) for c in full) > FLOAT_SAFE_MAGNITUDE:
            stats.unreliable_weight_events += 1
        return tuple(float(c) for c in full)
    return tuple(full)


def reduce_weight(lam: Weight) -> Weight:
    """Gcd-reduce an integer weight; float weights pass through unchanged."""
    if all(isinstance(c, int) for c in lam):
        return gcd_reduce(lam)
    return tuple(lam)
