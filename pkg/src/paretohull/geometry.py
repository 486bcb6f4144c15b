"""Incremental convex hull in R^p (2 <= p <= 5) with exact or float predicates.

The hull is maintained beneath-beyond style with simplicial (triangulated)
facets.  Each facet stores its inward normal and offset, i.e. every hull point
x satisfies ``normal . x >= offset`` and the facet's vertices satisfy it with
equality.  In exact mode all coordinates are integers, predicates are exact
integer signs and normals are kept gcd-reduced; in float mode predicates use
relative tolerances and normals are scaled to unit 1-norm.

A point is accepted as a new vertex only when it lies strictly outside some
facet.  When it does, every facet whose closed outer halfspace contains the
point is removed (so points that merely touch a supporting hyperplane never
linger as pseudo-vertices) and the horizon is stitched with new facets.  The
vertex set therefore always equals the true extreme points of the inserted
set, independently of insertion order.

Coplanar triangles sharing one geometric facet are not merged; consumers that
care about distinct facet directions deduplicate by reduced normal.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .numerics import AffineBasis, check_finite, det, dot, gcd_reduce

Coords = tuple


class InsertOutcome(enum.Enum):
    NEW_VERTEX = "new_vertex"
    INTERIOR_OR_BOUNDARY = "interior_or_boundary"


class DegenerateHullError(RuntimeError):
    """The inserted points never spanned full dimension."""


@dataclass
class Facet:
    id: int
    vertex_ids: tuple[int, ...]
    normal: tuple
    offset: object
    explored: bool = False

    def ridges(self) -> Iterable[frozenset]:
        ids = self.vertex_ids
        for drop in range(len(ids)):
            yield frozenset(ids[:drop] + ids[drop + 1:])


class HullState:
    """Mutable incremental hull; single writer, cheap read-only queries."""

    def __init__(self, dim: int, mode: str = "exact",
                 eps_visibility: float = 1e-9, eps_positive: float = 1e-12):
        if not 2 <= dim <= 5:
            raise ValueError(f"unsupported dimension {dim}")
        if mode not in ("exact", "float"):
            raise ValueError(f"unknown arithmetic mode {mode!r}")
        self.dim = dim
        self.mode = mode
        self.eps_visibility = eps_visibility
        self.eps_positive = eps_positive
        self.points: list[Coords] = []
        self.facets: dict[int, Facet] = {}
        self.facet_log: list[int] = []  # creation order, including dead facets
        self._coord_to_id: dict[Coords, int] = {}
        self._ridge_map: dict[frozenset, list[int]] = {}
        self._pending: list[int] = []
        self._basis = AffineBasis(dim, mode=mode)
        self._basis_ids: list[int] = []
        self._next_facet_id = 0
        self._ref_sum: Coords | None = None  # interior reference, scaled by dim+1

    # ------------------------------------------------------------------
    # queries

    @property
    def is_full_dimensional(self) -> bool:
        return self._ref_sum is not None

    @property
    def vertex_ids(self) -> set[int]:
        ids: set[int] = set()
        for f in self.facets.values():
            ids.update(f.vertex_ids)
        return ids

    @property
    def facet_count(self) -> int:
        return len(self.facets)

    @property
    def ridge_count(self) -> int:
        return len(self._ridge_map)

    def vertex_coords(self) -> set[Coords]:
        return {self.points[i] for i in self.vertex_ids}

    def point_id(self, coords: Sequence) -> int | None:
        return self._coord_to_id.get(tuple(coords))

    def unexplored_facets(self) -> list[Facet]:
        """Unexplored facets in creation order."""
        return [self.facets[fid] for fid in self.facet_log
                if fid in self.facets and not self.facets[fid].explored]

    def mark_explored(self, facet_id: int) -> None:
        self.facets[facet_id].explored = True

    def dump_facets(self) -> str:
        lines = []
        for fid in self.facet_log:
            f = self.facets.get(fid)
            if f is None:
                continue
            normal = " ".join(str(c) for c in f.normal)
            ids = ",".join(str(v) for v in f.vertex_ids)
            lines.append(f"{normal} | {f.offset} | {ids}")
        return "\n".join(lines)

    # ------------------------------------------------------------------
    # insertion

    def insert(self, coords: Sequence) -> InsertOutcome:
        """Insert a point; report whether it became a hull vertex.

        While fewer than dim+1 affinely independent points have been seen the
        point is buffered and the outcome is provisional (buffered points are
        re-run once the initial simplex exists).
        """
        coords = tuple(coords)
        if len(coords) != self.dim:
            raise ValueError(f"point has dimension {len(coords)}, hull wants {self.dim}")
        if self.mode == "float":
            for c in coords:
                check_finite(c)
        if coords in self._coord_to_id:
            return InsertOutcome.INTERIOR_OR_BOUNDARY
        pid = len(self.points)
        self.points.append(coords)
        self._coord_to_id[coords] = pid
        if not self.is_full_dimensional:
            return self._insert_pending(pid)
        return self._insert_existing(pid)

    def _insert_pending(self, pid: int) -> InsertOutcome:
        self._pending.append(pid)
        grew = self._basis.try_extend(self.points[pid])
        if grew:
            self._basis_ids.append(pid)
        if not self._basis.is_full:
            return (InsertOutcome.NEW_VERTEX if grew
                    else InsertOutcome.INTERIOR_OR_BOUNDARY)
        # dim+1 affinely independent points: build the simplex, replay the rest
        simplex = list(self._basis_ids)
        ref = [0] * self.dim
        for sid in simplex:
            for k, c in enumerate(self.points[sid]):
                ref[k] += c
        self._ref_sum = tuple(ref)
        for omit in range(len(simplex)):
            ids = tuple(sorted(simplex[:omit] + simplex[omit + 1:]))
            self._new_facet(ids)
        leftovers = [q for q in self._pending if q not in self._basis_ids]
        self._pending.clear()
        for q in leftovers:
            self._insert_existing(q)
        return InsertOutcome.NEW_VERTEX if grew else InsertOutcome.INTERIOR_OR_BOUNDARY

    def _insert_existing(self, pid: int) -> InsertOutcome:
        x = self.points[pid]
        strictly_outside = False
        weakly_visible: list[int] = []
        # dict order is creation order, so the scan stays deterministic
        for f in list(self.facets.values()):
            side = self._side(f, x)
            if side < 0:
                strictly_outside = True
                weakly_visible.append(f.id)
            elif side == 0:
                weakly_visible.append(f.id)
        if not strictly_outside:
            return InsertOutcome.INTERIOR_OR_BOUNDARY
        dead = set(weakly_visible)
        horizon: list[frozenset] = []
        for fid in weakly_visible:
            f = self.facets.pop(fid)
            for ridge in f.ridges():
                owners = self._ridge_map[ridge]
                owners.remove(fid)
                if not owners:
                    del self._ridge_map[ridge]
                elif owners[0] not in dead:
                    horizon.append(ridge)
        for ridge in horizon:
            self._new_facet(tuple(sorted(ridge | {pid})))
        return InsertOutcome.NEW_VERTEX

    # ------------------------------------------------------------------
    # facet construction and predicates

    def _side(self, facet: Facet, x: Coords) -> int:
        """-1 strictly outside, 0 on the supporting hyperplane, 1 inside."""
        value = dot(facet.normal, x) - facet.offset
        if self.mode == "exact":
            return -1 if value < 0 else (0 if value == 0 else 1)
        eps = self.eps_visibility * (1.0 + abs(facet.offset))
        if value < -eps:
            return -1
        if value > eps:
            return 1
        return 0

    def _new_facet(self, vertex_ids: tuple[int, ...]) -> Facet:
        normal, offset = self._oriented_hyperplane(vertex_ids)
        facet = Facet(self._next_facet_id, vertex_ids, normal, offset)
        self._next_facet_id += 1
        self.facets[facet.id] = facet
        self.facet_log.append(facet.id)
        for ridge in facet.ridges():
            self._ridge_map.setdefault(ridge, []).append(facet.id)
        return facet

    def _oriented_hyperplane(self, vertex_ids: tuple[int, ...]) -> tuple[tuple, object]:
        pts = [self.points[i] for i in vertex_ids]
        normal = hyperplane_normal(pts)
        base = pts[0]
        offset = dot(normal, base)
        # orient inward: the simplex centroid (scaled to stay integral) is
        # strictly interior to every hull produced after full dimension
        ref_side = dot(normal, self._ref_sum) - offset * (self.dim + 1)
        if ref_side == 0:
            raise DegenerateHullError("interior reference lies on a facet hyperplane")
        if ref_side < 0:
            normal = tuple(-c for c in normal)
            offset = -offset
        if self.mode == "exact":
            normal = gcd_reduce(normal)
            offset = dot(normal, base)
        else:
            scale = sum(abs(c) for c in normal)
            normal = tuple(c / scale for c in normal)
            offset = dot(normal, base)
        return normal, offset

    # ------------------------------------------------------------------
    # consistency checking (used by the test suite)

    def validate(self) -> None:
        """Check structural and geometric hull invariants; raise on failure."""
        if not self.is_full_dimensional:
            raise DegenerateHullError("hull is not full-dimensional")
        for ridge, owners in self._ridge_map.items():
            if len(owners) != 2:
                raise AssertionError(f"ridge {set(ridge)} shared by {len(owners)} facets")
        for f in self.facets.values():
            for vid in f.vertex_ids:
                if self._side(f, self.points[vid]) != 0:
                    raise AssertionError(f"facet {f.id} vertex {vid} off its hyperplane")
        for coords in self.points:
            for f in self.facets.values():
                if self._side(f, coords) < 0:
                    raise AssertionError(f"point {coords} strictly outside facet {f.id}")


def hyperplane_normal(points: Sequence[Coords]) -> tuple:
    """Unoriented normal of the hyperplane through p affinely independent points.

    Computed as the generalized cross product of the difference vectors
    (cofactor expansion), so integer inputs give an exact integer normal.
    """
    p = len(points)
    base = points[0]
    rows = [[c - b for c, b in zip(q, base)] for q in points[1:]]
    normal = []
    for j in range(p):
        minor = [row[:j] + row[j + 1:] for row in rows]
        cof = det(minor)
        normal.append(cof if j % 2 == 0 else -cof)
    if not any(normal):
        raise ValueError("points are affinely dependent; no hyperplane normal")
    return tuple(normal)


def facet_weight(facet: Facet, mode: str = "exact") -> tuple:
    """Scalarization weight of a facet: its inward normal, canonically scaled.

    Exact mode returns the gcd-reduced integer normal; float mode scales to
    unit 1-norm.  Minimizing ``weight . z`` over the outcome set pushes
    outward through the facet (or confirms it supports the hull).
    """
    if not any(facet.normal):
        raise ValueError("degenerate facet: zero normal")
    if mode == "exact":
        return gcd_reduce(facet.normal)
    scale = sum(abs(c) for c in facet.normal)
    return tuple(c / scale for c in facet.normal)


def is_nondominated_facet(facet: Facet, mode: str = "exact",
                          eps_positive: float = 1e-12) -> bool:
    """True iff every component of the inward normal is strictly positive."""
    if mode == "exact":
        return all(c > 0 for c in facet.normal)
    return all(c > eps_positive for c in facet.normal)
