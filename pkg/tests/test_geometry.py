import random

import pytest

from paretohull.geometry import (
    Facet,
    HullState,
    InsertOutcome,
    facet_weight,
    hyperplane_normal,
    is_nondominated_facet,
)

from conftest import EXAMPLE_Y1, EXAMPLE_Y2, EXAMPLE_Y3, EXAMPLE_Y4
from _oracles import hull_vertices_naive


def build_hull(points, dim=None, mode="exact"):
    hull = HullState(dim or len(points[0]), mode)
    for q in points:
        hull.insert(q)
    return hull


SIMPLEX3 = [(0, 0, 0), (6, 0, 0), (0, 6, 0), (0, 0, 6)]


class TestInsertion:
    def test_interior_point(self):
        hull = build_hull(SIMPLEX3)
        assert hull.insert((1, 1, 1)) is InsertOutcome.INTERIOR_OR_BOUNDARY
        assert hull.vertex_coords() == set(SIMPLEX3)

    def test_duplicate_point(self):
        hull = build_hull(SIMPLEX3)
        assert hull.insert((6, 0, 0)) is InsertOutcome.INTERIOR_OR_BOUNDARY

    def test_point_on_facet_hyperplane_inside_hull(self):
        # exactly on the x+y+z=6 facet, strictly inside that face
        hull = build_hull(SIMPLEX3)
        before = hull.dump_facets()
        assert hull.insert((2, 2, 2)) is InsertOutcome.INTERIOR_OR_BOUNDARY
        assert hull.dump_facets() == before

    def test_outside_point_becomes_vertex(self):
        hull = build_hull(SIMPLEX3)
        assert hull.insert((9, 9, 9)) is InsertOutcome.NEW_VERTEX
        assert (9, 9, 9) in hull.vertex_coords()
        hull.validate()

    def test_example_insert_outside_initial_simplex(self):
        # y4 lies outside the hull of {y1, y2, y3, dominated point}
        hull = build_hull([EXAMPLE_Y1, EXAMPLE_Y2, EXAMPLE_Y3, (16, 20, 16)])
        assert hull.insert(EXAMPLE_Y4) is InsertOutcome.NEW_VERTEX
        hull.validate()

    def test_collinear_midpoint_evicted_regardless_of_order(self):
        # (2,2) arrives first and is a vertex of the partial hull; once both
        # segment endpoints exist it must disappear from the vertex set
        pts = [(2, 2), (0, 0), (0, 4), (4, 0), (4, 4)]
        hull = build_hull(pts, dim=2)
        assert hull.vertex_coords() == {(0, 0), (0, 4), (4, 0), (4, 4)}

    def test_buffering_until_full_dimension(self):
        hull = HullState(3)
        assert not hull.is_full_dimensional
        hull.insert((0, 0, 0))
        hull.insert((1, 0, 0))
        hull.insert((2, 0, 0))  # dependent, stays buffered
        hull.insert((0, 1, 0))
        assert not hull.is_full_dimensional
        hull.insert((0, 0, 1))
        assert hull.is_full_dimensional
        # the buffered collinear point was replayed and is not a vertex
        assert (2, 0, 0) in hull.vertex_coords()
        assert (1, 0, 0) not in hull.vertex_coords()
        hull.validate()

    def test_wrong_dimension_rejected(self):
        with pytest.raises(ValueError):
            HullState(3).insert((1, 2))


class TestFacetQueries:
    def test_fresh_simplex_all_unexplored(self):
        hull = build_hull(SIMPLEX3)
        facets = hull.unexplored_facets()
        assert len(facets) == 4
        for f in facets:
            hull.mark_explored(f.id)
        assert hull.unexplored_facets() == []

    def test_new_facets_are_unexplored(self):
        hull = build_hull(SIMPLEX3)
        for f in hull.unexplored_facets():
            hull.mark_explored(f.id)
        hull.insert((9, 9, 9))
        assert hull.unexplored_facets()

    def test_dummy_style_facet_present(self):
        # frontier points plus three axis dummies: the all-dummy facet exists
        m = 97
        dummies = [(m, 0, 0), (0, m, 0), (0, 0, m)]
        hull = build_hull([EXAMPLE_Y1, EXAMPLE_Y2, EXAMPLE_Y3] + dummies)
        dummy_ids = {hull.point_id(d) for d in dummies}
        assert any(set(f.vertex_ids) == dummy_ids for f in hull.facets.values())

    def test_dump_format(self):
        hull = build_hull(SIMPLEX3)
        for line in hull.dump_facets().splitlines():
            normal, offset, ids = line.split(" | ")
            assert len(normal.split()) == 3
            int(offset)
            assert ids.split(",")


class TestFacetWeight:
    def test_example_plane_weight(self):
        # hyperplane through y1, y2, y3 oriented toward the improving side
        # carries the weight the naive dichotomic scheme stumbled on
        inside = tuple(c - 1 for c in EXAMPLE_Y1)
        hull = build_hull([EXAMPLE_Y1, EXAMPLE_Y2, EXAMPLE_Y3, inside])
        target = None
        for f in hull.facets.values():
            coords = {hull.points[i] for i in f.vertex_ids}
            if coords == {EXAMPLE_Y1, EXAMPLE_Y2, EXAMPLE_Y3}:
                target = f
        assert target is not None
        assert facet_weight(target) == (1, -40, -28)

    def test_axis_aligned_face(self):
        hull = build_hull(SIMPLEX3)
        weights = {facet_weight(f) for f in hull.facets.values()}
        assert (1, 0, 0) in weights and (0, 1, 0) in weights and (0, 0, 1) in weights

    def test_weights_are_reduced(self):
        from math import gcd
        hull = build_hull([EXAMPLE_Y1, EXAMPLE_Y2, EXAMPLE_Y3, (16, 20, 16)])
        for f in hull.facets.values():
            g = 0
            for c in facet_weight(f):
                g = gcd(g, abs(c))
            assert g == 1

    def test_zero_normal_rejected(self):
        bad = Facet(0, (0, 1, 2), (0, 0, 0), 0)
        with pytest.raises(ValueError):
            facet_weight(bad)


class TestNondominatedFacet:
    @pytest.mark.parametrize("normal,expected", [
        ((1, 1, 3), True),
        ((1, -40, -28), False),
        ((0, 1, 1), False),
    ])
    def test_positivity(self, normal, expected):
        f = Facet(0, (0, 1, 2), normal, 0)
        assert is_nondominated_facet(f) is expected


class TestAgainstNaiveOracle:
    @pytest.mark.parametrize("dim,npoints,seed", [
        (2, 18, 11), (2, 25, 12), (3, 15, 13), (3, 22, 14), (4, 12, 15),
    ])
    def test_vertex_sets_match(self, dim, npoints, seed):
        rng = random.Random(seed)
        pts = [tuple(rng.randint(0, 100) for _ in range(dim))
               for _ in range(npoints)]
        hull = build_hull(pts, dim=dim)
        hull.validate()
        assert hull.vertex_coords() == hull_vertices_naive(pts)

    def test_order_independence(self):
        rng = random.Random(77)
        pts = [tuple(rng.randint(0, 40) for _ in range(3)) for _ in range(18)]
        reference = build_hull(pts, dim=3).vertex_coords()
        for shuffle_seed in range(6):
            shuffled = pts[:]
            random.Random(shuffle_seed).shuffle(shuffled)
            assert build_hull(shuffled, dim=3).vertex_coords() == reference

    def test_euler_characteristic_3d(self):
        rng = random.Random(5)
        pts = [tuple(rng.randint(0, 60) for _ in range(3)) for _ in range(25)]
        hull = build_hull(pts, dim=3)
        v = len(hull.vertex_ids)
        assert v - hull.ridge_count + hull.facet_count == 2

    def test_soundness_after_insertions(self):
        rng = random.Random(123)
        hull = HullState(3)
        for _ in range(40):
            hull.insert(tuple(rng.randint(0, 30) for _ in range(3)))
        hull.validate()  # raises if any point is strictly outside any facet


class TestFloatMode:
    def test_simple_hull_matches_exact(self):
        rng = random.Random(9)
        pts = [tuple(rng.randint(0, 100) for _ in range(3)) for _ in range(20)]
        exact = build_hull(pts, dim=3).vertex_coords()
        floaty = build_hull([tuple(float(c) for c in q) for q in pts],
                            dim=3, mode="float")
        assert {tuple(int(c) for c in q) for q in floaty.vertex_coords()} == exact

    def test_normals_unit_l1(self):
        hull = build_hull([(0.0, 0.0), (4.0, 0.0), (0.0, 4.0)], dim=2,
                          mode="float")
        for f in hull.facets.values():
            assert sum(abs(c) for c in f.normal) == pytest.approx(1.0)

    def test_non_finite_coordinates_rejected(self):
        hull = HullState(2, "float")
        with pytest.raises(ValueError):
            hull.insert((float("nan"), 1.0))
        with pytest.raises(ValueError):
            hull.insert((float("inf"), 1.0))


def test_hyperplane_normal_example():
    normal = hyperplane_normal([EXAMPLE_Y1, EXAMPLE_Y2, EXAMPLE_Y3])
    assert normal in ((1, -40, -28), (-1, 40, 28))
