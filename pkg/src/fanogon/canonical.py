"""Canonical forms for lattice-transformation orbits.

Two polygons are the same Fano polygon when a change of lattice basis maps
one vertex set onto the other.  This module fixes a distinguished
representative of each orbit — under ``SL_2(Z)`` (orientation-preserving)
and under all of ``GL_2(Z)`` — so that orbit membership reduces to equality
of canonical forms.

The construction: for each cyclic rotation of the (anticlockwise) vertex
list, the unique ``SL_2(Z)`` map sending the leading vertex to ``(1, 0)``
and shear-reducing the second vertex to ``(a, r)`` with ``0 <= a < r``
rigidifies the whole list; the lexicographically smallest transformed list
over all rotations is the SL canonical form.  The GL form additionally
minimises over a reflection.  Both require the origin strictly interior
(consecutive vertices then span positively oriented cones), which holds for
every Fano polygon.
"""

from __future__ import annotations

from .geometry import (
    LatticePolygon,
    PolygonError,
    UnimodularMap,
    cross,
    extended_gcd,
    is_primitive,
)

Orientation = str  # "GL" | "SL"
CanonicalKey = tuple[tuple[int, int], ...]


def complete_to_sl(v) -> UnimodularMap:
    """The standard ``SL_2(Z)`` map taking the primitive vector ``v`` to
    ``(1, 0)``."""
    if not is_primitive(v):
        raise ValueError(f"vector {v} is not primitive")
    p, q = v
    _, t, u = extended_gcd(p, q)
    return UnimodularMap.of(t, u, -q, p)


def cone_normal_map(v0, v1) -> tuple[int, int, UnimodularMap]:
    """For primitive ``v0`` and any ``v1`` with ``cross(v0, v1) > 0``, the
    unique ``U`` in ``SL_2(Z)`` with ``U(v0) = (1, 0)`` and
    ``U(v1) = (a, r)``, ``0 <= a < r``.  Returns ``(a, r, U)``."""
    r = cross(v0, v1)
    if r <= 0:
        raise ValueError(f"cone ({v0}, {v1}) is not positively oriented")
    u0 = complete_to_sl(v0)
    x, _ = u0.apply(v1)
    q, a = divmod(x, r)
    shear = UnimodularMap.of(1, -q, 0, 1)
    return a, r, shear @ u0


def _sl_candidates(p: LatticePolygon):
    vs = p.vertices
    n = len(vs)
    for i in range(n):
        rotated = vs[i:] + vs[:i]
        try:
            _, _, u = cone_normal_map(rotated[0], rotated[1])
        except ValueError as exc:
            raise PolygonError(
                "canonical form requires the origin strictly interior") from exc
        yield tuple(u.apply(v) for v in rotated)


def canonical_key(p: LatticePolygon, orientation: Orientation = "GL") -> CanonicalKey:
    """The canonical vertex list of the orbit of ``p`` as a plain tuple;
    equal keys characterise equivalent polygons."""
    if orientation not in ("GL", "SL"):
        raise ValueError(f"orientation must be 'GL' or 'SL', got {orientation!r}")
    best = min(_sl_candidates(p))
    if orientation == "GL":
        best = min(best, min(_sl_candidates(p.reflected())))
    return best


def canonical_form(p: LatticePolygon, orientation: Orientation = "GL") -> LatticePolygon:
    """A distinguished representative of the lattice-transformation orbit of
    ``p`` (combined with cyclic relabelling)."""
    return LatticePolygon.from_points(canonical_key(p, orientation))


def are_equivalent(p: LatticePolygon, q: LatticePolygon,
                   orientation: Orientation = "GL") -> bool:
    return canonical_key(p, orientation) == canonical_key(q, orientation)
