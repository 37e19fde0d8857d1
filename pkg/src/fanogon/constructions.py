"""Explicit constructions: the hexagon family, lattice refinements, and
the weight-matrix route to Kähler–Einstein quadrilaterals.

The hexagon family ``make_phk(h, k)`` supplies infinitely many
Kähler–Einstein Fano polygons that are not symmetric.  Refining the
lattice by a fractional generator re-expresses a polygon in a finer
lattice, preserving weights but possibly losing Fano-ness.  The
weight-matrix route solves a two-row integer weight matrix for a rational
dual quadrilateral, dualizes back, and restricts to the lattice its
vertices span; searching parameter space through that route generates
further Kähler–Einstein quadrilaterals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd, lcm

from .canonical import canonical_form, canonical_key
from .geometry import (
    LatticePolygon,
    RationalPolygon,
    Vec,
    dual_of_rational,
    extended_gcd,
    is_fano,
    require_fano,
)


class InvalidParametersError(ValueError):
    """Construction parameters violate a stated precondition."""


def make_phk(h: int, k: int) -> LatticePolygon:
    """The hexagon with slanted sides at heights ``h`` and primitive
    vertices governed by ``k``; Kähler–Einstein but never symmetric.

    Requires ``h >= 2`` and ``k >= 1`` coprime to ``h``, ``h - 1``, and
    ``2h - 1`` (so all six vertices are primitive).
    """
    if h < 2 or k < 1:
        raise InvalidParametersError("need h >= 2 and k >= 1")
    for other in (h, h - 1, 2 * h - 1):
        if gcd(k, other) != 1:
            raise InvalidParametersError(
                f"k = {k} must be coprime to {other}")
    vertices = [
        (-h * k, 1 - h),
        ((1 - h) * k, -h),
        ((2 * h - 1) * k, -h),
        ((2 * h - 1) * k, 1 - h),
        ((1 - h) * k, 2 * h - 1),
        (-h * k, 2 * h - 1),
    ]
    p = LatticePolygon.from_points(vertices)
    assert p.vertices == tuple(vertices)  # already anticlockwise, lex-min first
    require_fano(p)
    return p


def _lattice_basis(vectors) -> tuple[tuple[int, int], tuple[int, int]]:
    """A triangular basis ``(a, 0), (b, d)`` with ``a, d > 0`` and
    ``0 <= b < a`` of the sublattice of ``Z^2`` the vectors generate."""
    wx, wy = 0, 0  # running generator of the second-coordinate gcd
    for (x, y) in vectors:
        if y == 0:
            continue
        if wy == 0:
            wx, wy = x, y
        else:
            g, alpha, beta = extended_gcd(wy, y)
            wx, wy = alpha * wx + beta * x, g
    if wy < 0:
        wx, wy = -wx, -wy
    if wy == 0:
        raise ValueError("vectors do not span the plane")
    a = 0
    for (x, y) in vectors:
        assert y % wy == 0
        a = gcd(a, x - (y // wy) * wx)
    if a == 0:
        raise ValueError("vectors do not span the plane")
    return (a, 0), (wx % a, wy)


def _coordinates_in_basis(
    basis: tuple[tuple[int, int], tuple[int, int]], v: tuple[int, int]
) -> tuple[int, int]:
    (a, _zero), (b, d) = basis
    c2, r2 = divmod(v[1], d)
    c1, r1 = divmod(v[0] - c2 * b, a)
    if r1 or r2:
        raise ValueError(f"{v} is not in the lattice")
    return (c1, c2)


@dataclass(frozen=True)
class RefinedPolygon:
    """A polygon re-expressed in a refined lattice; ``fano`` records
    whether it is still Fano there (vertices can lose primitivity)."""

    polygon: LatticePolygon
    fano: bool


def refine_lattice(p: LatticePolygon, k: int, v: Vec) -> RefinedPolygon:
    """Re-express the polygon in the refined lattice generated by ``Z^2``
    and ``v / k``.

    The result is basis-independent: it is returned in canonical form
    whenever it is still Fano, and in the coordinates of the triangular
    basis otherwise.
    """
    require_fano(p)
    if k < 1:
        raise InvalidParametersError("refinement denominator must be positive")
    # The refined lattice is L/k where L is generated by k*Z^2 and v.
    basis = _lattice_basis([(k, 0), (0, k), v])
    scaled = [_coordinates_in_basis(basis, (k * x, k * y)) for x, y in p.vertices]
    q = LatticePolygon.from_points(scaled)
    if is_fano(q):
        return RefinedPolygon(canonical_form(q), True)
    return RefinedPolygon(q, False)


@dataclass(frozen=True)
class QuadParams:
    """Integer parameters generating a quadrilateral weight matrix
    ``(a*l, a*l + b*r, 0, a*l + c*r; 0, a*m + b*s, a*m, a*m + c*s)``."""

    a: int
    b: int
    c: int
    d: int
    ell: int
    m: int
    r: int
    s: int

    def __post_init__(self) -> None:
        if self.b + self.c != -self.d * self.ell * self.m:
            raise InvalidParametersError("need b + c = -d*l*m")
        if 3 * self.a != self.d * (self.m * self.r + self.ell * self.s):
            raise InvalidParametersError("need 3a = d*(m*r + l*s)")
        if gcd(self.ell, self.m) != 1:
            raise InvalidParametersError("need gcd(l, m) = 1")
        if gcd(self.r, self.s) != 1:
            raise InvalidParametersError("need gcd(r, s) = 1")


WeightMatrix = tuple[tuple[int, int, int, int], tuple[int, int, int, int]]


def _check_shape(w: WeightMatrix) -> tuple[int, int, int, int, int, int]:
    """Validate the two-row sign pattern and return
    ``(l1, l2, l4, m2, m3, m4)``."""
    row1, row2 = w
    if len(row1) != 4 or len(row2) != 4 or row1[2] != 0 or row2[0] != 0:
        raise ValueError("weight matrix must have rows (*,*,0,*) and (0,*,*,*)")
    l1, l2, _, l4 = row1
    _, m2, m3, m4 = row2
    if l1 <= 0 or l2 <= 0 or l4 <= 0 or m2 <= 0 or m4 <= 0 or m3 >= 0:
        raise ValueError(
            "weight matrix must have positive entries except a negative "
            "third entry in the second row")
    return l1, l2, l4, m2, m3, m4


def quad_constraints_hold(w: WeightMatrix) -> bool:
    """Whether the two balancing identities of a Kähler–Einstein dual
    quadrilateral hold for this weight matrix."""
    l1, l2, l4, m2, m3, m4 = _check_shape(w)
    f = l1 + l2 + l4
    g = m2 + m3 + m4
    eq1 = (l1 - l2) * f * m3 * m3 == (m3 - m2) * g * l1 * l1
    eq2 = (l1 - l4) * f * m3 * m3 == (m3 - m4) * g * l1 * l1
    return eq1 and eq2


def params_to_weight_matrix(params: QuadParams) -> WeightMatrix:
    """The weight matrix generated by the parameters; its sign pattern is
    validated and the balancing identities are asserted."""
    a, b, c = params.a, params.b, params.c
    ell, m, r, s = params.ell, params.m, params.r, params.s
    w: WeightMatrix = (
        (a * ell, a * ell + b * r, 0, a * ell + c * r),
        (0, a * m + b * s, a * m, a * m + c * s),
    )
    try:
        _check_shape(w)
    except ValueError as exc:
        raise InvalidParametersError(f"parameters give {w}: {exc}") from exc
    assert quad_constraints_hold(w)
    return w


def weight_matrix_to_polygon(w: WeightMatrix) -> LatticePolygon | None:
    """Rebuild a Fano polygon whose dual quadrilateral carries the weight
    matrix ``w``.

    The four rational dual vertices are solved from the two rows after
    gauge-fixing the first two at ``(1, 0)`` and ``(0, 1)``; the dual of
    that quadrilateral is then restricted to the sublattice its vertices
    span, which removes the gauge.  Returns ``None`` when the
    construction does not produce a Fano polygon.
    """
    if not quad_constraints_hold(w):
        raise ValueError("weight matrix fails the balancing identities")
    l1, l2, l4, m2, m3, m4 = _check_shape(w)
    u1 = (Fraction(1), Fraction(0))
    u2 = (Fraction(0), Fraction(1))
    u4 = (Fraction(-l1, l4), Fraction(-l2, l4))
    u3 = (Fraction(m4 * l1, l4 * m3), Fraction(m4 * l2 - m2 * l4, l4 * m3))
    try:
        q = RationalPolygon.from_points([u1, u2, u3, u4])
    except ValueError:
        return None
    if len(q.vertices) != 4 or not q.origin_interior():
        return None
    back = dual_of_rational(q)
    denom = lcm(*(c.denominator for v in back.vertices for c in v))
    scaled = [(int(v[0] * denom), int(v[1] * denom)) for v in back.vertices]
    basis = _lattice_basis(scaled)
    restricted = LatticePolygon.from_points(
        [_coordinates_in_basis(basis, v) for v in scaled])
    if not is_fano(restricted):
        return None
    return canonical_form(restricted)


@dataclass(frozen=True)
class SearchHit:
    """One Kähler–Einstein quadrilateral found by the parameter search."""

    polygon: LatticePolygon
    symmetric: bool
    params: QuadParams


def search_ke_quads(
    ranges: dict[str, tuple[int, int]], limit: int | None = None
) -> list[SearchHit]:
    """Enumerate valid parameter tuples over inclusive integer ranges,
    build their polygons, and return the distinct Kähler–Einstein
    quadrilaterals sorted by canonical key.

    ``ranges`` maps each of ``a b c d l m r s`` to ``(lo, hi)``; a
    missing name defaults to the range of ``a``.  Every returned polygon
    is certified Kähler–Einstein exactly; ``limit`` caps the number of
    distinct hits.
    """
    from .symmetry import is_ke, is_symmetric

    def rng(name: str) -> range:
        lo, hi = ranges.get(name, ranges["a"])
        return range(lo, hi + 1)

    def contains(name: str, value: int) -> bool:
        lo, hi = ranges.get(name, ranges["a"])
        return lo <= value <= hi

    hits: dict[tuple, SearchHit] = {}
    for d, ell, m in product(rng("d"), rng("l"), rng("m")):
        if gcd(ell, m) != 1:
            continue
        for r, s in product(rng("r"), rng("s")):
            if gcd(r, s) != 1:
                continue
            three_a = d * (m * r + ell * s)
            if three_a % 3 or not contains("a", three_a // 3):
                continue
            a = three_a // 3
            # (l, m, a) and (-l, -m, -a) generate the same matrix; keep
            # one representative when the mirror also lies in the ranges.
            if (ell, m) < (-ell, -m) and contains("l", -ell) and \
                    contains("m", -m) and contains("a", -a):
                continue
            for b in rng("b"):
                c = -d * ell * m - b
                if not contains("c", c):
                    continue
                params = QuadParams(a, b, c, d, ell, m, r, s)
                try:
                    w = params_to_weight_matrix(params)
                except InvalidParametersError:
                    continue
                poly = weight_matrix_to_polygon(w)
                if poly is None:
                    continue
                assert is_ke(poly)
                key = canonical_key(poly)
                if key not in hits:
                    hits[key] = SearchHit(poly, is_symmetric(poly), params)
                    if limit is not None and len(hits) >= limit:
                        return [hits[k] for k in sorted(hits)]
    return [hits[k] for k in sorted(hits)]
