"""Automorphisms, symmetry classes, weights, and exact Kähler–Einstein
certification.

A lattice automorphism of a polygon is a ``GL_2(Z)`` map permuting its
vertices.  The polygon is *symmetric* when the common fixed space of its
automorphism group is trivial — which for plane polygons happens exactly
when it is centrally symmetric or carries an order-three rotation.  The
Kähler–Einstein property is certified exactly: the barycentre of the dual
polygon, computed by fan triangulation in rational arithmetic, must be the
origin.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd

from .geometry import (
    LatticePolygon,
    QVec,
    UnimodularMap,
    Vec,
    cross,
    dual,
    require_fano,
    vneg,
)

_ALLOWED_AUT_ORDERS = frozenset({1, 2, 3, 4, 6, 8, 12})


@dataclass(frozen=True)
class AutGroup:
    """The full lattice automorphism group of a polygon."""

    elements: tuple[UnimodularMap, ...]

    def __post_init__(self) -> None:
        if len(self.elements) not in _ALLOWED_AUT_ORDERS:
            raise ValueError(
                f"impossible automorphism group order {len(self.elements)}")

    @property
    def order(self) -> int:
        return len(self.elements)

    def element_orders(self) -> tuple[int, ...]:
        return tuple(_map_order(u) for u in self.elements)


def _map_order(u: UnimodularMap) -> int:
    acc = UnimodularMap.identity()
    for n in range(1, 13):
        acc = u @ acc
        if acc == UnimodularMap.identity():
            return n
    raise ValueError("automorphism of order > 12")


def _solve_pair(v1: Vec, v2: Vec, t1: Vec, t2: Vec) -> UnimodularMap | None:
    """The integral unimodular map sending ``v1 -> t1``, ``v2 -> t2``,
    if one exists."""
    det = cross(v1, v2)
    # U = (t1 t2) . (v1 v2)^{-1}, columns.
    raw = (
        (t1[0] * v2[1] - t2[0] * v1[1], t2[0] * v1[0] - t1[0] * v2[0]),
        (t1[1] * v2[1] - t2[1] * v1[1], t2[1] * v1[0] - t1[1] * v2[0]),
    )
    if any(x % det for row in raw for x in row):
        return None
    rows = tuple(tuple(x // det for x in row) for row in raw)
    udet = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if udet not in (1, -1):
        return None
    return UnimodularMap(rows)


def automorphism_group(p: LatticePolygon) -> AutGroup:
    """All lattice maps carrying the polygon to itself.

    An automorphism sends the adjacent vertex pair ``(v1, v2)`` to some
    adjacent pair, in either cyclic direction; each of the at most ``2m``
    candidate images determines the map uniquely, and a candidate belongs
    to the group exactly when it is integral, unimodular, and permutes the
    vertex set.
    """
    require_fano(p)
    vs = p.vertices
    m = len(vs)
    vset = frozenset(vs)
    found = []
    for i in range(m):
        for j in (1, -1):
            u = _solve_pair(vs[0], vs[1], vs[i], vs[(i + j) % m])
            if u is not None and all(u.apply(v) in vset for v in vs):
                found.append(u)
    return AutGroup(tuple(found))


def is_centrally_symmetric(p: LatticePolygon) -> bool:
    """Whether ``P = -P``."""
    require_fano(p)
    return frozenset(p.vertices) == frozenset(vneg(v) for v in p.vertices)


def is_3_symmetric(p: LatticePolygon) -> bool:
    """Whether some automorphism has order three."""
    return 3 in automorphism_group(p).element_orders()


def is_symmetric(p: LatticePolygon, group: AutGroup | None = None) -> bool:
    """Whether the automorphism group fixes only the origin.

    Decided exactly: the rows of all ``U - I`` are stacked and the common
    fixed space is trivial iff that integer matrix has rank two.
    """
    if group is None:
        group = automorphism_group(p)
    rows = []
    for u in group.elements:
        (a, b), (c, d) = u.rows
        for row in ((a - 1, b), (c, d - 1)):
            if row != (0, 0):
                rows.append(row)
    return any(cross(r, s) != 0 for i, r in enumerate(rows) for s in rows[i + 1:])


def dual_fan_decomposition(
    p: LatticePolygon,
) -> tuple[tuple[Fraction, QVec], ...]:
    """Triangulate the dual by diagonals from its first stored vertex;
    return per-triangle (normalized volume, barycentre) pairs."""
    require_fano(p)
    vs = dual(p).vertices
    d0 = vs[0]
    out = []
    for i in range(1, len(vs) - 1):
        d1, d2 = vs[i], vs[i + 1]
        vol = (d1[0] - d0[0]) * (d2[1] - d0[1]) - (d1[1] - d0[1]) * (d2[0] - d0[0])
        bary = ((d0[0] + d1[0] + d2[0]) / 3, (d0[1] + d1[1] + d2[1]) / 3)
        out.append((vol, bary))
    return tuple(out)


def dual_barycentre(p: LatticePolygon) -> QVec:
    """Exact barycentre of the dual polygon (volume-weighted average of
    fan-triangle barycentres)."""
    pieces = dual_fan_decomposition(p)
    total = sum(vol for vol, _ in pieces)
    x = sum(vol * b[0] for vol, b in pieces) / total
    y = sum(vol * b[1] for vol, b in pieces) / total
    return (x, y)


def is_ke(p: LatticePolygon) -> bool:
    """Whether the barycentre of the dual polygon is exactly the origin."""
    return dual_barycentre(p) == (Fraction(0), Fraction(0))


def weights(p: LatticePolygon) -> tuple[int, int, int]:
    """The primitive positive weight vector of a Fano triangle, aligned
    with the stored vertex order: ``sum(q[i] * v[i]) = 0``."""
    require_fano(p)
    vs = p.vertices
    if len(vs) != 3:
        raise ValueError("weights are defined for triangles only")
    raw = (cross(vs[1], vs[2]), cross(vs[2], vs[0]), cross(vs[0], vs[1]))
    g = gcd(*raw)
    return (raw[0] // g, raw[1] // g, raw[2] // g)


def _primitive_relation(entries: list[Fraction]) -> tuple[int, ...]:
    """Scale a rational vector to a primitive integer vector whose first
    nonzero entry is positive."""
    from math import lcm

    denom = lcm(*(e.denominator for e in entries))
    ints = [int(e * denom) for e in entries]
    g = gcd(*ints)
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def weight_matrix_of_sequence(vertices) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Weight matrix of an anticlockwise quadrilateral vertex sequence
    (integer or rational coordinates).

    Row one is the relation among vertices 1, 2, 4 (zero in position 3);
    row two the relation among vertices 2, 3, 4 (zero in position 1).
    Each row is scaled to content one with positive leading entry.
    """
    if len(vertices) != 4:
        raise ValueError("weight matrices are defined for quadrilaterals only")
    w = [(Fraction(v[0]), Fraction(v[1])) for v in vertices]

    def qcross(a, b) -> Fraction:
        return a[0] * b[1] - a[1] * b[0]

    row1 = _primitive_relation(
        [qcross(w[1], w[3]), qcross(w[3], w[0]), Fraction(0), qcross(w[0], w[1])])
    row2 = _primitive_relation(
        [Fraction(0), qcross(w[2], w[3]), qcross(w[3], w[1]), qcross(w[1], w[2])])
    return (row1, row2)


def weight_matrix(p: LatticePolygon) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Weight matrix of a Fano quadrilateral in stored vertex order."""
    require_fano(p)
    return weight_matrix_of_sequence(p.vertices)


def lattice_index(p: LatticePolygon) -> int:
    """Index of the sublattice generated by the vertices: determinant of
    its Hermite basis."""
    require_fano(p)
    return _span_index(p.vertices)


def _span_index(vectors) -> int:
    """Index in ``Z^2`` of the sublattice the vectors generate: the gcd of
    all two-by-two minors of the vector matrix (its second determinantal
    divisor times the first)."""
    g = 0
    for i, v in enumerate(vectors):
        for w in vectors[i + 1:]:
            g = gcd(g, cross(v, w))
    if g == 0:
        raise ValueError("vectors do not span the plane")
    return g


def ke_triangle_normal_form(p: LatticePolygon) -> tuple[int, int] | None:
    """For a Fano triangle with weights ``(1,1,1)``, the pair ``(k, a)``
    exhibiting it as ``conv{(-k, a-1), (k, -a), (0, 1)}`` up to a lattice
    isomorphism, with ``gcd(k, a) = gcd(k, a-1) = 1``, ``1 <= a <= k``,
    and ``a`` minimal over the isomorphism choices; ``None`` when the
    weights differ from ``(1,1,1)``."""
    from .canonical import complete_to_sl

    require_fano(p)
    vs = p.vertices
    if len(vs) != 3:
        raise ValueError("normal form is defined for triangles only")
    if any(sum(v[i] for v in vs) for i in (0, 1)):
        return None  # vertex sum nonzero <=> weights differ from (1,1,1)
    k = lattice_index(p)
    best_a = None
    for i in range(3):
        u = complete_to_sl(vs[i])
        x, y = u.apply(vs[(i + 1) % 3])
        # Composing with the quarter turn (0 -1; 1 0) puts vs[i] at (0,1)
        # and the next vertex anticlockwise at (-y, x) = (-k, a-1); the
        # reflection fixing (0,1) replaces a by 1-a, and shears fixing
        # (0,1) shift a by multiples of k.
        assert y == k
        for aa in (x + 1, -x):
            a = aa % k or k
            assert gcd(k, a) == 1 and gcd(k, a - 1) == 1
            if best_a is None or a < best_a:
                best_a = a
    assert best_a is not None
    assert k % 2 == 1
    return (k, best_a)
