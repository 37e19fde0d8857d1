"""Unit tests for the geometric core: vectors, hulls, polygons, duals."""

import random
from fractions import Fraction

import pytest

import oracles
from conftest import random_unimodular
from fanogon import (
    DegeneratePolygonError,
    LatticePolygon,
    NotFanoError,
    RationalPolygon,
    UnimodularMap,
    boundary_lattice_point_count,
    dual,
    dual_of_rational,
    is_fano,
    lattice_points,
    normalized_volume,
)
from fanogon.geometry import (
    content,
    convex_hull,
    cross,
    dot,
    extended_gcd,
    interior_lattice_point_count,
    is_primitive,
    primitive,
    reflection_map,
    require_fano,
    rot90ccw,
    vadd,
    vneg,
    vsub,
)

P2 = LatticePolygon.from_points([(1, 0), (0, 1), (-1, -1)])


class TestVectorHelpers:
    def test_cross_dot_basics(self):
        assert cross((1, 0), (0, 1)) == 1
        assert cross((0, 1), (1, 0)) == -1
        assert cross((2, 3), (4, 6)) == 0
        assert dot((2, 3), (4, -5)) == -7

    def test_arithmetic(self):
        assert vadd((1, 2), (3, -4)) == (4, -2)
        assert vsub((1, 2), (3, -4)) == (-2, 6)
        assert vneg((5, -7)) == (-5, 7)

    def test_content_and_primitive(self):
        assert content((6, -4)) == 2
        assert content((0, -5)) == 5
        assert primitive((6, -4)) == (3, -2)
        assert primitive((0, -5)) == (0, -1)
        assert is_primitive((3, -2)) and not is_primitive((6, -4))
        with pytest.raises(ValueError):
            primitive((0, 0))

    def test_rot90ccw(self):
        assert rot90ccw((1, 0)) == (0, 1)
        assert rot90ccw((0, 1)) == (-1, 0)

    def test_extended_gcd(self):
        rng = random.Random(1)
        for _ in range(300):
            a = rng.randint(-50, 50)
            b = rng.randint(-50, 50)
            g, x, y = extended_gcd(a, b)
            assert g >= 0
            assert a * x + b * y == g
            if (a, b) != (0, 0):
                assert a % g == 0 and b % g == 0


class TestUnimodularMap:
    def test_rejects_non_unimodular(self):
        with pytest.raises(ValueError):
            UnimodularMap.of(2, 0, 0, 1)
        with pytest.raises(ValueError):
            UnimodularMap.of(1, 2, 2, 4)

    def test_inverse_and_compose(self):
        rng = random.Random(2)
        for _ in range(200):
            u = random_unimodular(rng)
            v = random_unimodular(rng)
            assert (u @ u.inverse()).rows == ((1, 0), (0, 1))
            assert (u.inverse() @ u).rows == ((1, 0), (0, 1))
            w = (3, -5)
            assert (u @ v).apply(w) == u.apply(v.apply(w))
            assert (u @ v).det == u.det * v.det

    def test_reflection_map(self):
        r = reflection_map()
        assert r.det == -1
        assert r.apply((3, 4)) == (3, -4)

    def test_preserves_cross_up_to_det(self):
        rng = random.Random(3)
        for _ in range(200):
            u = random_unimodular(rng)
            a = (rng.randint(-9, 9), rng.randint(-9, 9))
            b = (rng.randint(-9, 9), rng.randint(-9, 9))
            assert cross(u.apply(a), u.apply(b)) == u.det * cross(a, b)


class TestConvexHull:
    def test_known_hull(self):
        pts = [(0, 0), (2, 0), (2, 2), (0, 2), (1, 1), (1, 0), (2, 1)]
        hull = convex_hull(pts)
        assert sorted(hull) == [(0, 0), (0, 2), (2, 0), (2, 2)]

    def test_hull_properties_random(self):
        rng = random.Random(4)
        for _ in range(150):
            pts = [(rng.randint(-8, 8), rng.randint(-8, 8)) for _ in range(12)]
            hull = convex_hull(pts)
            if len(hull) < 3:
                continue
            n = len(hull)
            # strictly convex anticlockwise: consecutive turns all left
            for i in range(n):
                a, b, c = hull[i], hull[(i + 1) % n], hull[(i + 2) % n]
                assert cross(vsub(b, a), vsub(c, b)) > 0
            for p in pts:
                assert oracles.contains(hull, p)
            assert set(hull) <= set(pts)

    def test_hull_drops_collinear_points(self):
        hull = convex_hull([(0, 0), (1, 0), (2, 0), (2, 2), (0, 2)])
        assert sorted(hull) == [(0, 0), (0, 2), (2, 0), (2, 2)]


class TestLatticePolygon:
    def test_from_points_normalizes(self):
        a = LatticePolygon.from_points([(1, 0), (0, 1), (-1, -1), (0, 0)])
        b = LatticePolygon.from_points([(-1, -1), (1, 0), (0, 1)])
        assert a == b
        assert a.vertices == b.vertices

    def test_vertex_cycle_starts_at_min(self):
        # stored cycle is anticlockwise from the lexicographic minimum
        p = LatticePolygon.from_points([(2, 0), (0, 2), (-2, 0), (0, -2)])
        assert p.vertices[0] == min(p.vertices)
        for i in range(len(p.vertices)):
            a = p.vertices[i]
            b = p.vertices[(i + 1) % len(p.vertices)]
            c = p.vertices[(i + 2) % len(p.vertices)]
            assert cross(vsub(b, a), vsub(c, b)) > 0

    def test_degenerate_raises(self):
        with pytest.raises(DegeneratePolygonError):
            LatticePolygon.from_points([(0, 0), (1, 1), (2, 2)])
        with pytest.raises(DegeneratePolygonError):
            LatticePolygon.from_points([(1, 0), (1, 0)])

    def test_edges_close_up(self, fano_polygons):
        for p in fano_polygons[:40]:
            edges = p.edges
            assert len(edges) == len(p.vertices)
            for i, (tail, head) in enumerate(edges):
                assert tail == p.vertices[i]
                assert head == p.vertices[(i + 1) % len(p.vertices)]

    def test_contains(self):
        assert P2.contains((0, 0))
        assert P2.contains((1, 0))
        assert not P2.contains((1, 1))
        assert P2.contains((Fraction(1, 2), Fraction(1, 2)))

    def test_transformed_reflected_negated(self, fano_polygons):
        rng = random.Random(5)
        for p in fano_polygons[:30]:
            u = random_unimodular(rng)
            q = p.transformed(u)
            assert sorted(q.vertices) == sorted(u.apply(v) for v in p.vertices)
            assert p.reflected() == p.transformed(reflection_map())
            assert p.negated() == p.transformed(UnimodularMap.of(-1, 0, 0, -1))


class TestFanoPredicate:
    def test_p2_is_fano(self):
        assert is_fano(P2)
        require_fano(P2)

    def test_origin_not_interior(self):
        shifted = LatticePolygon.from_points([(1, 0), (0, 1), (1, 1)])
        assert not is_fano(shifted)
        with pytest.raises(NotFanoError):
            require_fano(shifted)

    def test_origin_on_boundary(self):
        p = LatticePolygon.from_points([(1, 0), (0, 1), (-1, 0), (0, -1), (1, -1)])
        touching = LatticePolygon.from_points([(0, 1), (1, -1), (-1, 0)])
        # second polygon has the origin strictly inside; build one with it on an edge
        edge = LatticePolygon.from_points([(1, 0), (-1, 0), (0, 1)])
        assert not is_fano(edge)
        assert is_fano(p) and is_fano(touching)

    def test_imprimitive_vertex(self):
        p = LatticePolygon.from_points([(2, 0), (0, 1), (-1, -1)])
        assert not is_fano(p)


class TestCountsAndVolume:
    def test_against_oracles(self, mixed_polygons):
        for p in mixed_polygons[:120]:
            vs = p.vertices
            assert normalized_volume(p) == oracles.shoelace_volume(vs)
            assert boundary_lattice_point_count(p) == oracles.boundary_point_count(vs)
            assert interior_lattice_point_count(p) == oracles.interior_point_count(vs)

    def test_picks_theorem(self, fano_polygons):
        for p in fano_polygons:
            vol = normalized_volume(p)
            b = boundary_lattice_point_count(p)
            i = interior_lattice_point_count(p)
            assert vol == 2 * i + b - 2

    def test_lattice_points_vs_oracle(self, fano_polygons):
        for p in fano_polygons[:25]:
            for k in (1, 2, 3):
                assert lattice_points(p, k) == oracles.lattice_points(p.vertices, k)

    def test_lattice_points_default_dilation(self):
        assert sorted(lattice_points(P2)) == [(-1, -1), (0, 0), (0, 1), (1, 0)]


class TestDual:
    def test_p2_dual(self):
        q = dual(P2)
        assert sorted(q.vertices) == sorted(
            [(Fraction(-1), Fraction(-1)), (Fraction(2), Fraction(-1)),
             (Fraction(-1), Fraction(2))]
        )

    def test_dual_vertices_vs_oracle(self, mixed_polygons):
        for p in mixed_polygons[:100]:
            got = set(dual(p).vertices)
            want = oracles.dual_vertices(p.vertices)
            assert got == want

    def test_dual_vertex_is_normal_over_height(self, fano_polygons):
        from fanogon import edge_metrics

        for p in fano_polygons[:40]:
            duals = set(dual(p).vertices)
            for m in edge_metrics(p):
                u = (Fraction(m.normal[0], m.height), Fraction(m.normal[1], m.height))
                assert u in duals

    def test_biduality(self, mixed_polygons):
        for p in mixed_polygons[:100]:
            back = dual_of_rational(dual(p))
            assert back.is_integral()
            assert back.to_lattice() == p

    def test_dual_orientation_anticlockwise(self, fano_polygons):
        for p in fano_polygons[:30]:
            vs = dual(p).vertices
            n = len(vs)
            for i in range(n):
                a, b, c = vs[i], vs[(i + 1) % n], vs[(i + 2) % n]
                ab = (b[0] - a[0], b[1] - a[1])
                bc = (c[0] - b[0], c[1] - b[1])
                assert ab[0] * bc[1] - ab[1] * bc[0] > 0


class TestRationalPolygon:
    def test_integral_roundtrip(self):
        q = RationalPolygon.from_points([(1, 0), (0, 1), (-1, -1)])
        assert q.is_integral()
        assert q.to_lattice() == P2

    def test_non_integral(self):
        q = RationalPolygon.from_points(
            [(Fraction(1, 2), 0), (0, 1), (-1, -1)]
        )
        assert not q.is_integral()
        with pytest.raises(ValueError):
            q.to_lattice()
