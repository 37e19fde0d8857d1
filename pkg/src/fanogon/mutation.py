"""Mutations of Fano polygons and mutation-equivalence classes.

A mutation is a surgery along a grading ``w``: the polygon is sliced into
lattice segments at each ``w``-height, heights below zero give up a factor
``F = conv{0, k*d}`` scaled by the depth, and heights above zero absorb it.
The result is again Fano, has the same directed singularity content and
dual lattice-point counts, and the surgery is undone by mutating with
``-w`` and the *same* factor.  Closing a polygon under all single
mutations along long edges — with explicit caps, since classes may be
infinite — yields its mutation-equivalence class up to lattice
isomorphism.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .canonical import CanonicalKey, canonical_form, canonical_key
from .edges import directed_sc, edge_metrics
from .geometry import (
    LatticePolygon,
    Vec,
    boundary_lattice_point_count,
    dot,
    extended_gcd,
    is_primitive,
    require_fano,
    vadd,
    vneg,
    vscale,
)


class NoFactorError(ValueError):
    """No admissible factor: some vertex height is too wide for the cut."""


@dataclass(frozen=True, order=True)
class MutationSpec:
    """A grading ``w``, a factor direction ``d`` with ``w(d) = 0``, and a
    factor multiplicity ``k``; the factor is ``conv{0, k*d}``."""

    w: Vec
    d: Vec
    k: int = 1

    def __post_init__(self) -> None:
        if not is_primitive(self.w):
            raise ValueError(f"grading {self.w} is not primitive")
        if not is_primitive(self.d):
            raise ValueError(f"factor direction {self.d} is not primitive")
        if dot(self.w, self.d) != 0:
            raise ValueError("factor direction must lie at grading zero")
        if self.k < 1:
            raise ValueError("factor multiplicity must be positive")

    def inverse(self) -> "MutationSpec":
        """The spec undoing this one: opposite grading, same factor."""
        return MutationSpec(vneg(self.w), self.d, self.k)

    def to_json(self) -> dict:
        return {"w": list(self.w), "d": list(self.d), "k": self.k}


@dataclass(frozen=True)
class GradedSlice:
    """The lattice segment ``conv(P ∩ {w = height})``; ``endpoints`` is
    ``None`` when the line carries no lattice point of the polygon."""

    height: int
    endpoints: tuple[Vec, Vec] | None

    @property
    def lattice_length(self) -> int | None:
        if self.endpoints is None:
            return None
        from .geometry import content, vsub

        a, b = self.endpoints
        return 0 if a == b else content(vsub(b, a))


class _Grader:
    """Exact coordinates on the lines of constant ``w``-height: each
    lattice point on ``{w = h}`` is ``base(h) + t*d`` for an integer
    ``t``."""

    def __init__(self, w: Vec, d: Vec):
        _, x, y = extended_gcd(w[0], w[1])
        self.w = w
        self.d = d
        self.unit = (x, y)  # w(unit) = 1
        _, sx, sy = extended_gcd(d[0], d[1])
        self.s = (sx, sy)  # s(d) = 1

    def base(self, h: int) -> Vec:
        return vscale(h, self.unit)

    def point(self, h: int, t: int) -> Vec:
        return vadd(self.base(h), vscale(t, self.d))

    def t_of(self, h: int, px: Fraction, py: Fraction) -> Fraction:
        sx, sy = self.s
        bx, by = self.base(h)
        return sx * (px - bx) + sy * (py - by)


def _rational_t_range(
    p: LatticePolygon, grader: _Grader, h: int
) -> tuple[Fraction, Fraction] | None:
    """Parameter range of the rational slice ``P ∩ {w = h}``."""
    w = grader.w
    ts: list[Fraction] = []
    for tail, head in p.edges:
        a, b = dot(w, tail), dot(w, head)
        if a == b:
            if a == h:
                ts.append(grader.t_of(h, Fraction(tail[0]), Fraction(tail[1])))
                ts.append(grader.t_of(h, Fraction(head[0]), Fraction(head[1])))
        elif min(a, b) <= h <= max(a, b):
            u = Fraction(h - a, b - a)
            px = tail[0] + u * (head[0] - tail[0])
            py = tail[1] + u * (head[1] - tail[1])
            ts.append(grader.t_of(h, px, py))
    if not ts:
        return None
    return min(ts), max(ts)


def _lattice_t_range(
    p: LatticePolygon, grader: _Grader, h: int
) -> tuple[int, int] | None:
    rng = _rational_t_range(p, grader, h)
    if rng is None:
        return None
    lo, hi = math.ceil(rng[0]), math.floor(rng[1])
    return (lo, hi) if lo <= hi else None


def graded_slices(p: LatticePolygon, spec: MutationSpec) -> tuple[GradedSlice, ...]:
    """All graded pieces of the polygon, from the lowest ``w``-height to
    the highest."""
    require_fano(p)
    grader = _Grader(spec.w, spec.d)
    heights = [dot(spec.w, v) for v in p.vertices]
    out = []
    for h in range(min(heights), max(heights) + 1):
        rng = _lattice_t_range(p, grader, h)
        pts = None if rng is None else (grader.point(h, rng[0]), grader.point(h, rng[1]))
        out.append(GradedSlice(h, pts))
    return tuple(out)


def _vertex_t_span(
    p: LatticePolygon, grader: _Grader, h: int
) -> tuple[int, int] | None:
    """Parameter span of the polygon vertices at height ``h``, if any."""
    ts = [
        grader.t_of(h, Fraction(v[0]), Fraction(v[1]))
        for v in p.vertices
        if dot(grader.w, v) == h
    ]
    if not ts:
        return None
    lo, hi = min(ts), max(ts)
    assert lo.denominator == 1 and hi.denominator == 1
    return int(lo), int(hi)


def factor_exists(p: LatticePolygon, spec: MutationSpec) -> bool:
    """Whether the factor ``conv{0, k*d}`` admits remainders at every
    negative height: each height carrying a vertex must have a lattice
    slice at least ``k * |h|`` long."""
    require_fano(p)
    grader = _Grader(spec.w, spec.d)
    h_min = min(dot(spec.w, v) for v in p.vertices)
    for h in range(h_min, 0):
        span = _vertex_t_span(p, grader, h)
        if span is None:
            continue
        rng = _lattice_t_range(p, grader, h)
        assert rng is not None  # a vertex is a lattice point on the slice
        if rng[1] - rng[0] < spec.k * (-h):
            return False
    return True


def mutate(p: LatticePolygon, spec: MutationSpec) -> LatticePolygon:
    """The mutation of ``p`` along ``spec``.

    Negative heights keep only a remainder — the slice shortened by
    ``k*|h|`` — while nonnegative heights gain ``k*h`` in the factor
    direction.  The canonical remainder (anchored at the low-``t`` end) is
    used; any admissible choice yields the same polygon.
    """
    if not factor_exists(p, spec):
        raise NoFactorError(
            f"no factor for grading {spec.w}, direction {spec.d}, "
            f"multiplicity {spec.k}")
    grader = _Grader(spec.w, spec.d)
    heights = [dot(spec.w, v) for v in p.vertices]
    pts: list[Vec] = []
    for h in range(min(heights), max(heights) + 1):
        rng = _lattice_t_range(p, grader, h)
        if rng is None:
            continue
        lo, hi = rng
        if h < 0:
            hi -= spec.k * (-h)
            if hi < lo:
                continue  # empty remainder at a vertex-free height
        else:
            hi += spec.k * h
        pts.append(grader.point(h, lo))
        pts.append(grader.point(h, hi))
    result = LatticePolygon.from_points(pts)
    require_fano(result)
    return result


def mutate_with_remainders(
    p: LatticePolygon,
    spec: MutationSpec,
    remainders: Mapping[int, tuple[Vec, Vec] | None],
) -> LatticePolygon:
    """Mutation with explicitly chosen remainders at negative heights.

    ``remainders`` maps a negative height to a lattice segment (endpoint
    pair on the line ``w = h``) or to ``None`` for the empty choice;
    heights not present use the canonical remainder.  Inadmissible
    choices raise ``ValueError``.  The result never depends on the
    choices; this entry point exists so tests can prove that.
    """
    if not factor_exists(p, spec):
        raise NoFactorError(
            f"no factor for grading {spec.w}, direction {spec.d}, "
            f"multiplicity {spec.k}")
    grader = _Grader(spec.w, spec.d)
    heights = [dot(spec.w, v) for v in p.vertices]
    pts: list[Vec] = []
    for h in range(min(heights), max(heights) + 1):
        rng = _lattice_t_range(p, grader, h)
        if h < 0 and h in remainders:
            pts.extend(_checked_remainder(p, grader, spec, h, rng, remainders[h]))
            continue
        if rng is None:
            continue
        lo, hi = rng
        if h < 0:
            hi -= spec.k * (-h)
            if hi < lo:
                continue
        else:
            hi += spec.k * h
        pts.append(grader.point(h, lo))
        pts.append(grader.point(h, hi))
    result = LatticePolygon.from_points(pts)
    require_fano(result)
    return result


def _checked_remainder(
    p: LatticePolygon,
    grader: _Grader,
    spec: MutationSpec,
    h: int,
    slice_rng: tuple[int, int] | None,
    segment: tuple[Vec, Vec] | None,
) -> Iterable[Vec]:
    """Validate one remainder choice against the sandwich condition
    ``V(P)_h ⊆ R_h + |h|F ⊆ P_h`` and yield its endpoints."""
    width = spec.k * (-h)
    span = _vertex_t_span(p, grader, h)
    if segment is None:
        if span is not None:
            raise ValueError(f"height {h} carries vertices; remainder cannot be empty")
        return ()
    ts = []
    for pt in segment:
        if dot(grader.w, pt) != h:
            raise ValueError(f"remainder endpoint {pt} is not at height {h}")
        t = grader.t_of(h, Fraction(pt[0]), Fraction(pt[1]))
        assert t.denominator == 1
        ts.append(int(t))
    lo, hi = min(ts), max(ts)
    if slice_rng is None or lo < slice_rng[0] or hi + width > slice_rng[1]:
        raise ValueError(f"remainder at height {h} does not fit inside the slice")
    if span is not None and (lo > span[0] or hi + width < span[1]):
        raise ValueError(f"remainder at height {h} does not cover the vertices")
    return (grader.point(h, lo), grader.point(h, hi))


def enumerate_mutations(
    p: LatticePolygon,
) -> tuple[tuple[MutationSpec, LatticePolygon], ...]:
    """One mutation per long edge: grading the edge's inner normal,
    factor the edge direction with multiplicity one.  Short edges admit
    no factor and contribute nothing."""
    out = []
    for m in edge_metrics(p):
        if m.is_long:
            spec = MutationSpec(m.normal, m.direction, 1)
            out.append((spec, mutate(p, spec)))
    return tuple(out)


def is_minimal(p: LatticePolygon) -> bool:
    """Whether no single mutation reduces the boundary lattice-point
    count: every long edge's height is at most the polygon's reach in the
    opposite direction."""
    metrics = edge_metrics(p)
    for m in metrics:
        if m.is_long:
            if m.height > max(dot(m.normal, v) for v in p.vertices):
                return False
    return True


_DEFAULT_CAPS = (10_000, 200)


@dataclass(frozen=True)
class ClassMember:
    """One representative of a mutation-equivalence class, stored in
    canonical form with a replayable discovery path."""

    polygon: LatticePolygon
    parent: CanonicalKey | None
    via: MutationSpec | None


@dataclass(frozen=True)
class MutationClass:
    """A capped breadth-first closure of a polygon under single
    mutations, deduplicated by canonical form."""

    members: dict[CanonicalKey, ClassMember]
    edges: tuple[tuple[CanonicalKey, CanonicalKey, MutationSpec], ...]
    caps: tuple[int, int]
    exhausted: bool
    root: CanonicalKey

    @property
    def representatives(self) -> dict[CanonicalKey, LatticePolygon]:
        return {key: member.polygon for key, member in self.members.items()}

    def __len__(self) -> int:
        return len(self.members)

    def to_json(self) -> dict:
        nodes = []
        for key in sorted(self.members):
            member = self.members[key]
            nodes.append({
                "key": _key_string(key),
                "vertices": [list(v) for v in member.polygon.vertices],
                "directed_sc": directed_sc(member.polygon).to_json(),
                "minimal": is_minimal(member.polygon),
                "parent": None if member.parent is None else _key_string(member.parent),
                "via": None if member.via is None else member.via.to_json(),
            })
        return {
            "root": _key_string(self.root),
            "caps": {"max_polygons": self.caps[0],
                     "max_boundary_points": self.caps[1]},
            "exhausted": self.exhausted,
            "size": len(self.members),
            "members": nodes,
            "edges": [
                {"source": _key_string(a), "target": _key_string(b),
                 "via": spec.to_json()}
                for a, b, spec in self.edges
            ],
        }


def _key_string(key: CanonicalKey) -> str:
    return ";".join(f"{x},{y}" for x, y in key)


def explore_class(
    p: LatticePolygon, caps: tuple[int, int] = _DEFAULT_CAPS
) -> MutationClass:
    """Breadth-first closure of ``p`` under long-edge mutations.

    Polygons are identified up to lattice isomorphism (including
    reflections).  A result whose boundary lattice-point count exceeds
    the second cap is pruned; hitting either cap clears ``exhausted``.
    The outcome is deterministic: frontiers are processed in sorted key
    order, so each member's recorded parent is the smallest-key
    discoverer at the shallowest depth.
    """
    require_fano(p)
    max_polygons, max_boundary = caps
    if max_polygons < 1 or max_boundary < 1:
        raise ValueError("caps must be positive")
    root_poly = canonical_form(p)
    root_key = canonical_key(root_poly)
    members = {root_key: ClassMember(root_poly, None, None)}
    edges: list[tuple[CanonicalKey, CanonicalKey, MutationSpec]] = []
    frontier = [root_key]
    capped = boundary_lattice_point_count(p) > max_boundary
    if capped:
        frontier = []
    while frontier:
        frontier.sort()
        next_frontier = []
        for key in frontier:
            source = members[key].polygon
            # Mutation preserves the directed singularity content of its
            # input exactly; members themselves are only canonical up to
            # reflection, so the root's content is not the reference.
            source_sc = directed_sc(source)
            for spec, image in enumerate_mutations(source):
                assert directed_sc(image) == source_sc
                child = canonical_form(image)
                child_key = canonical_key(child)
                if child_key == key:
                    continue
                edges.append((key, child_key, spec))
                if child_key in members:
                    continue
                if boundary_lattice_point_count(child) > max_boundary:
                    capped = True
                    continue
                if len(members) >= max_polygons:
                    capped = True
                    continue
                members[child_key] = ClassMember(child, key, spec)
                next_frontier.append(child_key)
        frontier = next_frontier
    dedup_edges = tuple(sorted(set(edges)))
    return MutationClass(
        members=members,
        edges=dedup_edges,
        caps=caps,
        exhausted=not capped,
        root=root_key,
    )


def count_distinguished(cls: MutationClass) -> tuple[int, int]:
    """How many stored representatives are symmetric, and how many are
    non-symmetric Kähler–Einstein triangles.  On an exhaustively explored
    class the two can total at most one; that bound is asserted, not
    assumed."""
    from .symmetry import is_symmetric

    symmetric = ke_triangles = 0
    for member in cls.members.values():
        poly = member.polygon
        if is_symmetric(poly):
            symmetric += 1
        elif len(poly.vertices) == 3 and all(
            sum(v[i] for v in poly.vertices) == 0 for i in (0, 1)
        ):
            ke_triangles += 1
    if cls.exhausted:
        assert symmetric + ke_triangles <= 1
    return symmetric, ke_triangles
