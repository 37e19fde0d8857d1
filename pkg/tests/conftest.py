"""Shared corpora of randomly generated Fano polygons.

All generation is seeded, so every test run sees the same polygons.  The
corpora are built once per session and handed to tests through fixtures;
helper functions are importable directly (``from conftest import ...``)
for tests that want custom sizes or seeds.
"""

from __future__ import annotations

import math
import random
from functools import lru_cache

import pytest

from fanogon import (
    LatticePolygon,
    UnimodularMap,
    is_fano,
)

BOX = 9  # coordinate bound for random vertex candidates


def random_unimodular(rng: random.Random, spread: int = 4) -> UnimodularMap:
    """A random element of GL_2(Z), built from shears, a quarter turn,
    and an optional reflection."""
    u = UnimodularMap.identity()
    for _ in range(rng.randint(1, 3)):
        b = rng.randint(-spread, spread)
        c = rng.randint(-spread, spread)
        u = UnimodularMap.of(1, b, 0, 1) @ UnimodularMap.of(1, 0, c, 1) @ u
    if rng.random() < 0.5:
        u = UnimodularMap.of(0, -1, 1, 0) @ u
    if rng.random() < 0.5:
        u = UnimodularMap.of(0, 1, 1, 0) @ u
    return u


def random_sl(rng: random.Random, spread: int = 4) -> UnimodularMap:
    """A random element of SL_2(Z) (determinant +1)."""
    u = random_unimodular(rng, spread)
    if u.det == -1:
        u = UnimodularMap.of(0, 1, 1, 0) @ u
    return u


def _try_fano(points) -> LatticePolygon | None:
    try:
        p = LatticePolygon.from_points(points)
    except ValueError:
        return None
    return p if is_fano(p) else None


def random_fano(rng: random.Random, box: int = BOX) -> LatticePolygon:
    """Rejection-sample one Fano polygon: hull of a few random points."""
    while True:
        pts = [
            (rng.randint(-box, box), rng.randint(-box, box))
            for _ in range(rng.randint(3, 7))
        ]
        p = _try_fano(pts)
        if p is not None:
            return p


def random_cs_fano(rng: random.Random, box: int = BOX) -> LatticePolygon:
    """A centrally symmetric Fano polygon: hull of a point set closed
    under negation."""
    while True:
        pts = []
        for _ in range(rng.randint(2, 4)):
            v = (rng.randint(-box, box), rng.randint(-box, box))
            pts.extend([v, (-v[0], -v[1])])
        p = _try_fano(pts)
        if p is not None:
            return p


_G3 = UnimodularMap.of(0, -1, 1, -1)  # order three: G^3 = identity


def random_3sym_fano(rng: random.Random, box: int = BOX) -> LatticePolygon:
    """A Fano polygon invariant under an order-three rotation: hull of
    full orbits of random points under ``_G3``."""
    while True:
        pts = []
        for _ in range(rng.randint(1, 3)):
            v = (rng.randint(-box, box), rng.randint(-box, box))
            for _ in range(3):
                pts.append(v)
                v = _G3.apply(v)
        p = _try_fano(pts)
        if p is not None:
            return p


def random_ke_triangle(rng: random.Random, kmax: int = 15) -> LatticePolygon:
    """A Kähler–Einstein Fano triangle in disguise: the vertex-sum-zero
    triangle ``(0,1), (-k,a-1), (k,-a)`` pushed through a random
    lattice transformation."""
    while True:
        k = rng.randrange(1, kmax + 1, 2)
        a = rng.randint(1, k)
        if math.gcd(a, k) == 1 and math.gcd(a - 1, k) == 1:
            break
    tri = LatticePolygon.from_points([(0, 1), (-k, a - 1), (k, -a)])
    return tri.transformed(random_unimodular(rng))


def fano_corpus(seed: int, count: int, box: int = BOX):
    rng = random.Random(seed)
    return tuple(random_fano(rng, box) for _ in range(count))


@lru_cache(maxsize=None)
def _session_corpora():
    rng = random.Random(20260822)
    plain = tuple(random_fano(rng) for _ in range(120))
    central = tuple(random_cs_fano(rng) for _ in range(50))
    threefold = tuple(random_3sym_fano(rng) for _ in range(35))
    ke_tris = tuple(random_ke_triangle(rng) for _ in range(50))
    return plain, central, threefold, ke_tris


@pytest.fixture(scope="session")
def fano_polygons():
    """120 seeded random Fano polygons."""
    return _session_corpora()[0]


@pytest.fixture(scope="session")
def cs_polygons():
    """50 seeded centrally symmetric Fano polygons."""
    return _session_corpora()[1]


@pytest.fixture(scope="session")
def threefold_polygons():
    """35 seeded Fano polygons with an order-three rotational symmetry."""
    return _session_corpora()[2]


@pytest.fixture(scope="session")
def ke_triangles():
    """50 seeded Kähler–Einstein Fano triangles in random bases."""
    return _session_corpora()[3]


@pytest.fixture(scope="session")
def mixed_polygons(fano_polygons, cs_polygons, threefold_polygons, ke_triangles):
    """The union of all corpora: 255 Fano polygons."""
    return fano_polygons + cs_polygons + threefold_polygons + ke_triangles
