"""Brute-force ground truth for nondominated extreme points.

This module never runs the search algorithms: outcomes are enumerated
exhaustively (all permutations / all feasible subsets), dominated vectors are
filtered pairwise, and each surviving vector is classified definitionally.
A vector y is a nondominated extreme point exactly when some strictly
positive weight makes it the unique weighted-sum minimizer, i.e. when

    lambda_k >= 1 for all k,   lambda . (y' - y) >= 1 for all other y'

is feasible (strict conditions are scaled to closed ones, which is valid
because any feasible weight may be multiplied by a positive constant).
Feasibility is decided exactly: y is *not* extreme iff y lies in
conv(Y_N \\ {y}) + R^p_>=, a tiny equality-form program solved by a
fraction-free (integer-pivoting) phase-1 simplex with Bland's rule.  The
Farkas certificate of an infeasible membership program is turned into an
integer weight witnessing the strict separation.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .solvers import KIND_ASSIGNMENT, Instance, OutcomePoint

AP_ENUMERATION_CAP = 8
KP_ENUMERATION_CAP = 20

# deterministic strictly positive probe weights: a cheap sufficiency screen
# marking unique argmins as extreme before any simplex runs
_PRESCREEN_BASE = (1, 7, 61, 509)


class OversizeError(ValueError):
    """Instance too large for exhaustive enumeration."""


def enumerate_outcomes(inst: Instance) -> list[OutcomePoint]:
    """All distinct canonical outcome vectors, one feasible preimage each."""
    if inst.kind == KIND_ASSIGNMENT:
        if inst.n > AP_ENUMERATION_CAP:
            raise OversizeError(f"assignment enumeration capped at n <= {AP_ENUMERATION_CAP}")
        seen: dict[tuple, OutcomePoint] = {}
        for perm in permutations(range(inst.n)):
            y = tuple(sum(mat[i][perm[i]] for i in range(inst.n))
                      for mat in inst.objectives)
            if y not in seen:
                seen[y] = OutcomePoint(y, perm)
        return sorted(seen.values(), key=lambda op: op.y)
    if inst.n > KP_ENUMERATION_CAP:
        raise OversizeError(f"knapsack enumeration capped at n <= {KP_ENUMERATION_CAP}")
    seen = {}
    profits = inst.objectives
    weights = inst.weights
    offsets = inst.kp_offsets

    def visit(idx: int, room: int, gained: list[int], chosen: list[int]) -> None:
        if idx == inst.n:
            y = tuple(u - g for u, g in zip(offsets, gained))
            if y not in seen:
                seen[y] = OutcomePoint(y, tuple(chosen))
            return
        visit(idx + 1, room, gained, chosen)
        if weights[idx] <= room:
            chosen.append(idx)
            taken = [g + prof[idx] for g, prof in zip(gained, profits)]
            visit(idx + 1, room - weights[idx], taken, chosen)
            chosen.pop()

    visit(0, inst.capacity, [0] * inst.p, [])
    return sorted(seen.values(), key=lambda op: op.y)


def pareto_filter(points: Iterable) -> list[tuple]:
    """Nondominated vectors of a finite set (canonical minimization)."""
    vectors = sorted({tuple(_vector(q)) for q in points})
    if not vectors:
        return []
    kept: list[tuple] = []
    kept_arr = np.empty((0, len(vectors[0])), dtype=np.int64)
    for v in vectors:
        arr = np.asarray(v, dtype=np.int64)
        # any dominator sorts lexicographically before v, so checking the
        # kept prefix is enough
        if kept and bool(np.all(kept_arr <= arr, axis=1).any()):
            continue
        kept.append(v)
        kept_arr = np.vstack([kept_arr, arr])
    return kept


def oracle_ysn1(points: Iterable) -> list[tuple]:
    """Nondominated extreme vectors of a finite canonical point set."""
    return sorted(ysn1_certificates(points))


def ysn1_certificates(points: Iterable) -> dict[tuple, tuple[int, ...]]:
    """Map each nondominated extreme vector to an integer weight certificate.

    Every returned weight lambda satisfies lambda_k >= 1 and
    lambda . (y' - y) >= 1 for all other nondominated y'.
    """
    frontier = pareto_filter(points)
    if not frontier:
        return {}
    p = len(frontier[0])
    if len(frontier) == 1:
        return {frontier[0]: tuple([1] * p)}
    result: dict[tuple, tuple[int, ...]] = {}
    undecided = _prescreen(frontier, result)
    for y in undecided:
        others = [v for v in frontier if v != y]
        farkas = _membership_farkas(y, others)
        if farkas is not None:
            result[y] = _strict_integer_certificate(farkas, y, others)
    return result


def _vector(q) -> tuple:
    return tuple(q.y) if isinstance(q, OutcomePoint) else tuple(q)


def _prescreen(frontier: Sequence[tuple], result: dict) -> list[tuple]:
    """Mark vectors that uniquely minimize a probe weight; return the rest."""
    arr = np.asarray(frontier, dtype=np.int64)
    p = arr.shape[1]
    probes = []
    for shift in range(p):
        for base in _PRESCREEN_BASE:
            probes.append(tuple(base ** ((k + shift) % p) for k in range(p)))
    decided: set[int] = set()
    for lam in probes:
        values = arr @ np.asarray(lam, dtype=np.int64)
        best = values.min()
        holders = np.flatnonzero(values == best)
        if len(holders) == 1:
            idx = int(holders[0])
            if idx not in decided:
                decided.add(idx)
                result[frontier[idx]] = lam
    return [v for i, v in enumerate(frontier) if i not in decided]


def _membership_farkas(y: tuple, others: Sequence[tuple]):
    """Farkas dual proving y outside conv(others) + R^p_>=, or None if inside.

    The membership program uses variables alpha (convex weights over the
    other vectors) and d >= 0 (the dominance cone):

        sum_j alpha_j * y'_j + d = y,    sum_j alpha_j = 1.

    The d-columns start as an identity basis for the first p rows; a single
    artificial covers the convexity row, so phase 1 minimizes one variable.
    """
    p = len(y)
    m = len(others)
    rows = p + 1
    # columns: m alpha | p identity (d) | 1 artificial | rhs
    art = m + p
    width = m + p + 2
    tab = [[0] * width for _ in range(rows)]
    for j, point in enumerate(others):
        for k in range(p):
            tab[k][j] = point[k]
        tab[p][j] = 1
    for k in range(p):
        tab[k][m + k] = 1
        tab[k][-1] = y[k]
    tab[p][art] = 1
    tab[p][-1] = 1
    basis = list(range(m, m + p)) + [art]
    # phase-1 objective: minimize the artificial; reduced costs relative to
    # the starting basis are -(convexity row) on the alpha columns
    obj = [0] * width
    for j in range(m):
        obj[j] = -1
    delta = 1
    while True:
        enter = next((j for j in range(m + p) if obj[j] < 0), None)
        if enter is None:
            break
        leave_row = None
        for i in range(rows):
            if tab[i][enter] > 0:
                if leave_row is None:
                    leave_row = i
                else:
                    lhs = tab[i][-1] * tab[leave_row][enter]
                    rhs = tab[leave_row][-1] * tab[i][enter]
                    if lhs < rhs or (lhs == rhs and basis[i] < basis[leave_row]):
                        leave_row = i
        if leave_row is None:
            raise RuntimeError("phase-1 objective unbounded; membership program is broken")
        pivot = tab[leave_row][enter]
        for i in range(rows):
            if i == leave_row:
                continue
            factor = tab[i][enter]
            tab[i] = [(a * pivot - factor * b) // delta
                      for a, b in zip(tab[i], tab[leave_row])]
        factor = obj[enter]
        obj = [(a * pivot - factor * b) // delta
               for a, b in zip(obj, tab[leave_row])]
        basis[leave_row] = enter
        delta = pivot
    art_value = Fraction(0)
    for i in range(rows):
        if basis[i] == art:
            art_value = Fraction(tab[i][-1], delta)
    if art_value == 0:
        return None  # membership feasible: y is not extreme
    # u = c_B B^{-1}; B^{-1} sits under the initial identity columns (d, art)
    art_rows = [i for i in range(rows) if basis[i] == art]
    u = []
    for k in range(rows):
        col = m + k  # d_k for k < p, the artificial for k == p
        u.append(sum(Fraction(tab[i][col], delta) for i in art_rows))
    return u


def _strict_integer_certificate(u: Sequence[Fraction], y: tuple,
                                others: Sequence[tuple]) -> tuple[int, ...]:
    """Turn a Farkas dual into an integer weight with unit margins."""
    p = len(y)
    lam = [-u[k] for k in range(p)]  # >= 0, strictly separating y from others
    gap = min(sum(l * (o[k] - y[k]) for k, l in enumerate(lam)) for o in others)
    if gap <= 0:
        raise RuntimeError("Farkas certificate failed strict separation")
    spread = max(abs(sum(o[k] - y[k] for k in range(p))) for o in others)
    eps = gap / (2 * (1 + spread))
    lam = [l + eps for l in lam]
    scale = 1
    for l in lam:
        scale = scale * l.denominator // gcd(scale, l.denominator)
    ints = [int(l * scale) for l in lam]
    g = 0
    for v in ints:
        g = gcd(g, v)
    ints = [v // g for v in ints]
    # margins are positive integers after scaling, hence >= 1 as required
    for o in others:
        margin = sum(l * (o[k] - y[k]) for k, l in enumerate(ints))
        if margin < 1:
            raise RuntimeError("integer certificate lost its margin")
    if any(v < 1 for v in ints):
        raise RuntimeError("integer certificate has a non-positive component")
    return tuple(ints)
