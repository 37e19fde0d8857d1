"""Canonical forms must be genuine orbit invariants: stable under any
lattice transformation and any relabelling, and finer for SL than GL
exactly on chiral polygons."""

import random

import pytest

from conftest import random_sl, random_unimodular
from fanogon import LatticePolygon, are_equivalent, canonical_form, canonical_key
from fanogon.canonical import complete_to_sl, cone_normal_map
from fanogon.geometry import cross

P2 = LatticePolygon.from_points([(1, 0), (0, 1), (-1, -1)])


class TestConeNormalMap:
    def test_maps_first_ray_to_basis(self):
        rng = random.Random(21)
        for _ in range(200):
            v0 = (rng.randint(-9, 9), rng.randint(-9, 9))
            v1 = (rng.randint(-9, 9), rng.randint(-9, 9))
            from math import gcd

            if gcd(*v0) != 1 or gcd(*v1) != 1 or cross(v0, v1) <= 0:
                continue
            a, r, u = cone_normal_map(v0, v1)
            assert u.det == 1
            assert r == cross(v0, v1)
            assert 0 <= a < max(r, 1)

    def test_complete_to_sl(self):
        rng = random.Random(22)
        for _ in range(200):
            v = (rng.randint(-9, 9), rng.randint(-9, 9))
            from math import gcd

            if gcd(*v) != 1:
                continue
            u = complete_to_sl(v)
            assert u.det == 1


class TestCanonicalInvariance:
    def test_gl_orbit_invariance(self, mixed_polygons):
        rng = random.Random(23)
        for p in mixed_polygons[:150]:
            u = random_unimodular(rng)
            q = p.transformed(u)
            assert canonical_key(q) == canonical_key(p)
            assert canonical_form(q) == canonical_form(p)

    def test_sl_orbit_invariance(self, mixed_polygons):
        rng = random.Random(24)
        for p in mixed_polygons[:150]:
            u = random_sl(rng)
            q = p.transformed(u)
            assert canonical_key(q, "SL") == canonical_key(p, "SL")

    def test_canonical_form_is_idempotent(self, fano_polygons):
        for p in fano_polygons[:60]:
            c = canonical_form(p)
            assert canonical_form(c) == c
            assert c == LatticePolygon.from_points(canonical_key(p))
            assert set(c.vertices) == set(canonical_key(p))

    def test_canonical_form_in_same_orbit(self, fano_polygons):
        # same normalized volume and boundary count certify we never
        # left the orbit (full equivalence is what canonical_key defines)
        from fanogon import boundary_lattice_point_count, normalized_volume

        for p in fano_polygons[:60]:
            c = canonical_form(p)
            assert normalized_volume(c) == normalized_volume(p)
            assert boundary_lattice_point_count(c) == boundary_lattice_point_count(p)
            assert sorted(canonical_key(c)) == sorted(c.vertices)

    def test_gl_equals_sl_up_to_reflection(self, fano_polygons):
        for p in fano_polygons[:60]:
            gl = canonical_key(p)
            assert gl == min(canonical_key(p, "SL"),
                             canonical_key(p.reflected(), "SL"))

    def test_chiral_polygon_splits_under_sl(self):
        # a polygon with no orientation-reversing symmetry: its mirror is
        # GL-equivalent but not SL-equivalent
        chiral = LatticePolygon.from_points([(2, -3), (1, 5), (-1, -2)])
        mirror = chiral.reflected()
        assert are_equivalent(chiral, mirror, "GL")
        assert not are_equivalent(chiral, mirror, "SL")

    def test_symmetric_polygon_single_sl_class(self):
        square = LatticePolygon.from_points([(1, 0), (0, 1), (-1, 0), (0, -1)])
        assert are_equivalent(square, square.reflected(), "SL")

    def test_invalid_orientation_rejected(self):
        with pytest.raises(ValueError):
            canonical_key(P2, "XX")


class TestEquivalence:
    def test_distinct_polygons_differ(self):
        a = LatticePolygon.from_points([(1, 0), (0, 1), (-1, -1)])
        b = LatticePolygon.from_points([(1, 0), (0, 1), (-1, -2)])
        assert not are_equivalent(a, b)

    def test_equivalence_matches_key_equality(self, fano_polygons):
        rng = random.Random(25)
        polys = fano_polygons[:40]
        for _ in range(120):
            p, q = rng.choice(polys), rng.choice(polys)
            assert are_equivalent(p, q) == (canonical_key(p) == canonical_key(q))
