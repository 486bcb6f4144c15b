"""Independent brute-force oracles used only by the test suite.

Everything here is deliberately naive and kept separate from the package so
the implementations under test are checked against a different route:
permutation expansion for determinants, exhaustive search for the solvers,
supporting-hyperplane enumeration for hull vertices, and the textbook
monotone chain for bi-objective frontiers.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations


def det_by_permutation_expansion(matrix) -> int:
    """Sum over permutations of signed products (Leibniz formula)."""
    n = len(matrix)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):  # parity by counting inversions
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        prod = 1
        for i in range(n):
            prod *= matrix[i][perm[i]]
        total += sign * prod
    return total


def brute_force_assignment(cost) -> tuple[int, list[tuple]]:
    """Minimum total cost and all optimal permutations, by enumeration."""
    n = len(cost)
    best = None
    argmins = []
    for perm in permutations(range(n)):
        value = sum(cost[i][perm[i]] for i in range(n))
        if best is None or value < best:
            best = value
            argmins = [perm]
        elif value == best:
            argmins.append(perm)
    return best, argmins


def brute_force_knapsack(profit, weights, capacity) -> int:
    """Maximum total profit over all feasible subsets."""
    n = len(weights)
    best = 0
    for mask in range(1 << n):
        w = g = 0
        for i in range(n):
            if mask >> i & 1:
                w += weights[i]
                g += profit[i]
        if w <= capacity and g > best:
            best = g
    return best


def hull_vertices_naive(points) -> set[tuple]:
    """Hull vertex set via candidate facet hyperplanes through p-subsets.

    A supporting hyperplane is one with every point on a single closed side;
    a point is a vertex exactly when the supporting hyperplanes through it
    have normals of full rank (its normal cone is full-dimensional).
    """
    pts = sorted(set(map(tuple, points)))
    dim = len(pts[0])
    supporting: dict[tuple, list[tuple]] = {q: [] for q in pts}
    for subset in combinations(pts, dim):
        normal = _hyperplane_normal(subset)
        if normal is None:
            continue
        offset = sum(n * c for n, c in zip(normal, subset[0]))
        sides = [sum(n * c for n, c in zip(normal, q)) - offset for q in pts]
        if all(s >= 0 for s in sides):
            oriented = normal
        elif all(s <= 0 for s in sides):
            oriented = tuple(-n for n in normal)
        else:
            continue
        for q, s in zip(pts, sides):
            if s == 0:
                supporting[q].append(oriented)
    return {q for q, normals in supporting.items()
            if normals and _rank(normals) == dim}


def _hyperplane_normal(subset):
    base = subset[0]
    rows = [[c - b for c, b in zip(q, base)] for q in subset[1:]]
    dim = len(base)
    normal = []
    for j in range(dim):
        minor = [row[:j] + row[j + 1:] for row in rows]
        cof = det_by_permutation_expansion(minor)
        normal.append(cof if j % 2 == 0 else -cof)
    return tuple(normal) if any(normal) else None


def _rank(rows) -> int:
    work = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    cols = len(work[0])
    pivot_col = 0
    while rank < len(work) and pivot_col < cols:
        pivot = next((r for r in range(rank, len(work)) if work[r][pivot_col]), None)
        if pivot is None:
            pivot_col += 1
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        lead = work[rank][pivot_col]
        work[rank] = [x / lead for x in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][pivot_col]:
                f = work[r][pivot_col]
                work[r] = [a - f * b for a, b in zip(work[r], work[rank])]
        rank += 1
        pivot_col += 1
    return rank


def biobjective_frontier_extremes(points) -> list[tuple]:
    """Nondominated extreme points in 2-d: lower hull of the pareto set."""
    pareto: list[tuple] = []
    best_second = None
    for q in sorted(set(map(tuple, points))):
        if best_second is None or q[1] < best_second:
            pareto.append(q)
            best_second = q[1]
    chain: list[tuple] = []
    for q in pareto:  # sorted by first coordinate, second strictly decreasing
        while len(chain) >= 2 and _cross(chain[-2], chain[-1], q) <= 0:
            chain.pop()
        chain.append(q)
    return chain


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
