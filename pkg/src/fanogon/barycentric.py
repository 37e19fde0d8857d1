"""The barycentric transformation and strict-type determination.

``B(P)`` is the hull of the normalized sums of adjacent vertices.  It
need not keep the origin interior, so iterating ``B`` on a Fano polygon
eventually either leaves the Fano world (strict type ``B_k``: the last
Fano iterate is ``B^k``) or runs forever (type ``B_infinity``, undecidable
by iteration alone).  One provable certificate is implemented: a
symmetric iterate forces every later iterate to stay Fano, because
automorphisms carry over to ``B`` images and symmetric polygons are
Kähler–Einstein, hence of type ``B_1``, inductively.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import (
    DegeneratePolygonError,
    LatticePolygon,
    is_fano,
    primitive,
    vadd,
)

AT_LEAST_CAP = ">=cap"


class DegenerateSumError(ValueError):
    """An adjacent vertex pair sums to zero, so its normalized sum is
    undefined.  Cannot happen for Fano input (adjacent vertices are never
    antipodal when the origin is strictly interior)."""


def bary_transform(p: LatticePolygon) -> LatticePolygon:
    """The hull of ``(v_i + v_{i+1}) / gcd`` over adjacent vertex pairs.

    Accepts any lattice polygon; the result of transforming a Fano
    polygon need not be Fano itself.
    """
    vs = p.vertices
    sums = []
    for i, v in enumerate(vs):
        s = vadd(v, vs[(i + 1) % len(vs)])
        if s == (0, 0):
            raise DegenerateSumError(
                f"adjacent vertices {v} and {vs[(i + 1) % len(vs)]} are antipodal")
        sums.append(primitive(s))
    return LatticePolygon.from_points(sums)


@dataclass(frozen=True)
class BkReport:
    """Outcome of iterating the barycentric transformation.

    ``iterates[j]`` is ``B^j`` of the input; every entry except possibly
    the last is Fano.  ``strict_type`` is the index of the last Fano
    iterate when the next one left the Fano world, and the sentinel
    ``">=cap"`` when iteration stopped at the cap or on a symmetric
    iterate (``symmetric_certificate_at``), which proves type
    ``B_infinity`` outright.

    When the image of the last iterate is not even two-dimensional (its
    normalized sums are collinear), it has left the Fano world without
    being representable as a polygon: ``strict_type`` is still the index
    of the last Fano iterate, but no witness is appended, so the chain
    then has ``strict_type + 1`` entries instead of ``strict_type + 2``.
    """

    iterates: tuple[LatticePolygon, ...]
    strict_type: int | str
    cap: int
    symmetric_certificate_at: int | None = None

    @property
    def settled(self) -> bool:
        """Whether the exact strict type is known (a finite answer or a
        symmetry certificate for infinity)."""
        return isinstance(self.strict_type, int) or (
            self.symmetric_certificate_at is not None)

    def to_json(self) -> dict:
        return {
            "iterates": [[list(v) for v in q.vertices] for q in self.iterates],
            "strict_type": self.strict_type,
            "cap": self.cap,
            "symmetric_certificate_at": self.symmetric_certificate_at,
        }


def type_bk(p: LatticePolygon, cap: int = 20) -> BkReport:
    """Iterate ``bary_transform`` until an iterate stops being Fano, a
    symmetric iterate certifies type ``B_infinity``, or ``cap``
    applications have been made."""
    from .symmetry import is_symmetric

    if cap < 1:
        raise ValueError("iteration cap must be positive")
    if not is_fano(p):
        raise ValueError("strict type is defined for Fano polygons")
    iterates = [p]
    for j in range(cap + 1):
        current = iterates[-1]
        if is_symmetric(current):
            return BkReport(tuple(iterates), AT_LEAST_CAP, cap, j)
        if j == cap:
            break
        try:
            nxt = bary_transform(current)
        except DegeneratePolygonError:
            # the image collapsed to a segment: gone from the Fano
            # world, but with no polygon to record as a witness
            return BkReport(tuple(iterates), j, cap, None)
        iterates.append(nxt)
        if not is_fano(nxt):
            return BkReport(tuple(iterates), j, cap, None)
    return BkReport(tuple(iterates), AT_LEAST_CAP, cap, None)
