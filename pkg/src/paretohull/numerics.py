"""Exact scalar arithmetic helpers and small exact linear algebra.

Arbitrary-precision integers are plain Python ``int``; exact rationals are
``fractions.Fraction`` (always normalized, positive denominator).  This module
adds the few pieces the geometry and oracle layers need on top of that:
exact determinants, gcd reduction of integer vectors, affine-rank tracking,
and integer kernel vectors.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isfinite
from typing import Sequence


def dot(a: Sequence, b: Sequence):
    """Inner product of two equal-length vectors."""
    return sum(x * y for x, y in zip(a, b))


def check_finite(value: float) -> float:
    """Reject NaN and infinities at construction time of float scalars."""
    if not isfinite(value):
        raise ValueError(f"non-finite scalar: {value!r}")
    return value


def det(matrix: Sequence[Sequence]) -> object:
    """Determinant of a small square matrix.

    Integer matrices are evaluated exactly with Bareiss fraction-free
    elimination (all intermediate values stay integral).  Float matrices fall
    back to Gaussian elimination with partial pivoting.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("det: matrix is not square")
    if n == 0:
        return 1
    if all(isinstance(x, int) for row in matrix for x in row):
        return _det_bareiss(matrix)
    return _det_float(matrix)


def _det_bareiss(matrix: Sequence[Sequence[int]]) -> int:
    a = [list(row) for row in matrix]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                # exact by the Bareiss identity
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def _det_float(matrix: Sequence[Sequence[float]]) -> float:
    a = [[float(x) for x in row] for row in matrix]
    n = len(a)
    sign = 1.0
    for k in range(n):
        pivot_row = max(range(k, n), key=lambda r: abs(a[r][k]))
        if a[pivot_row][k] == 0.0:
            return 0.0
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            for j in range(k, n):
                a[i][j] -= f * a[k][j]
    result = sign
    for k in range(n):
        result *= a[k][k]
    return result


def gcd_reduce(vector: Sequence[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its components' absolute values.

    Signs are preserved; the result's components have gcd 1.  The all-zero
    vector has no direction and is rejected.
    """
    g = 0
    for x in vector:
        g = gcd(g, abs(x))
    if g == 0:
        raise ValueError("gcd_reduce: all-zero vector")
    return tuple(x // g for x in vector)


def integer_orthogonal_vector(rows: Sequence[Sequence[int]], dim: int) -> tuple[int, ...]:
    """A nonzero integer vector orthogonal to every given integer row.

    The rows must span a subspace of rank < dim.  Solved by rational row
    reduction, then cleared to a gcd-reduced integer vector.
    """
    reduced: list[list[Fraction]] = []
    pivots: list[int] = []
    for row in rows:
        v = [Fraction(x) for x in row]
        for prow, pcol in zip(reduced, pivots):
            if v[pcol]:
                f = v[pcol]
                v = [a - f * b for a, b in zip(v, prow)]
        pivot = next((j for j, x in enumerate(v) if x), None)
        if pivot is None:
            continue
        v = [x / v[pivot] for x in v]
        # keep fully reduced form so back-substitution stays one step
        for i, (prow, _) in enumerate(zip(reduced, pivots)):
            if prow[pivot]:
                f = prow[pivot]
                reduced[i] = [a - f * b for a, b in zip(prow, v)]
        reduced.append(v)
        pivots.append(pivot)
    if len(reduced) >= dim:
        raise ValueError("rows span the full space; no orthogonal vector exists")
    free = next(j for j in range(dim) if j not in pivots)
    # kernel vector of the row space: x[free]=1, back-substituted pivot entries
    x = [Fraction(0)] * dim
    x[free] = Fraction(1)
    for prow, pcol in zip(reduced, pivots):
        x[pcol] = -prow[free]
    denom_lcm = 1
    for val in x:
        denom_lcm = denom_lcm * val.denominator // gcd(denom_lcm, val.denominator)
    ints = [int(val * denom_lcm) for val in x]
    return gcd_reduce(ints)


class AffineBasis:
    """Incremental affine-rank tracker for a stream of points.

    ``try_extend`` reports whether a point enlarges the affine span of the
    points accepted so far.  Exact mode reduces integer difference vectors
    fraction-free; float mode uses Gram-Schmidt with a relative tolerance.
    """

    def __init__(self, dim: int, mode: str = "exact", tol: float = 1e-9):
        self.dim = dim
        self.mode = mode
        self.tol = tol
        self.origin: tuple | None = None
        self._rows: list[tuple] = []
        self._pivots: list[int] = []

    @property
    def rank(self) -> int:
        """Affine rank minus one (number of independent directions)."""
        return len(self._rows)

    @property
    def is_full(self) -> bool:
        return self.origin is not None and len(self._rows) == self.dim

    def try_extend(self, coords: Sequence) -> bool:
        if self.origin is None:
            self.origin = tuple(coords)
            return True
        if self.is_full:
            return False
        v = [c - o for c, o in zip(coords, self.origin)]
        if self.mode == "exact":
            return self._extend_exact(v)
        return self._extend_float(v)

    def _extend_exact(self, v: list[int]) -> bool:
        for row, pcol in zip(self._rows, self._pivots):
            if v[pcol]:
                rp, vp = row[pcol], v[pcol]
                v = [a * rp - b * vp for a, b in zip(v, row)]
        if not any(v):
            return False
        v = list(gcd_reduce(v))
        self._rows.append(tuple(v))
        self._pivots.append(next(j for j, x in enumerate(v) if x))
        return True

    def _extend_float(self, v: list[float]) -> bool:
        scale = max(1.0, max(abs(x) for x in v))
        for row in self._rows:
            proj = dot(v, row)
            v = [a - proj * b for a, b in zip(v, row)]
        norm = sum(x * x for x in v) ** 0.5
        if norm <= self.tol * scale:
            return False
        self._rows.append(tuple(x / norm for x in v))
        self._pivots.append(0)
        return True

    def span_normal(self) -> tuple[int, ...]:
        """Integer normal of a hyperplane containing the current affine span.

        Exact mode only; requires the span to be a strict subspace.
        """
        if self.mode != "exact":
            raise ValueError("span_normal is exact-mode only")
        return integer_orthogonal_vector([list(r) for r in self._rows], self.dim)
