"""Exact planar lattice geometry primitives.

Everything here is integer or ``fractions.Fraction`` arithmetic; no floats.
The two polygon types are immutable value objects whose vertex cycles are
stored anticlockwise and rotation-normalised (lexicographically smallest
vertex first), so structural equality and hashing coincide with equality of
the underlying convex polygon.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Iterable, Sequence, TypeVar

from . import _kernels

Vec = tuple[int, int]
QVec = tuple[Fraction, Fraction]
_V = TypeVar("_V", Vec, QVec)


class PolygonError(ValueError):
    """Base class for polygon construction and operation failures."""


class DegeneratePolygonError(PolygonError):
    """The point set does not span a two-dimensional convex polygon."""


class UnboundedDualError(PolygonError):
    """The dual is unbounded: the origin is not strictly interior."""


class NotFanoError(PolygonError):
    """An operation requiring a Fano polygon received a non-Fano one."""


# ---------------------------------------------------------------------------
# vector helpers
# ---------------------------------------------------------------------------

def cross(a, b):
    """Signed area form ``a_x b_y - a_y b_x`` (positive iff ``b`` is
    anticlockwise of ``a``)."""
    return a[0] * b[1] - a[1] * b[0]


def dot(a, b):
    return a[0] * b[0] + a[1] * b[1]


def vsub(a: _V, b: _V) -> _V:
    return (a[0] - b[0], a[1] - b[1])


def vadd(a: _V, b: _V) -> _V:
    return (a[0] + b[0], a[1] + b[1])


def vneg(a: _V) -> _V:
    return (-a[0], -a[1])


def vscale(c: int, a: Vec) -> Vec:
    return (c * a[0], c * a[1])


def content(a: Vec) -> int:
    """gcd of the coordinates; 0 only for the zero vector."""
    return gcd(a[0], a[1])


def primitive(a: Vec) -> Vec:
    """The primitive vector on the ray through ``a`` (``a`` must be nonzero)."""
    c = content(a)
    if c == 0:
        raise ValueError("zero vector has no primitive representative")
    return (a[0] // c, a[1] // c)


def is_primitive(a: Vec) -> bool:
    return content(a) == 1


def rot90ccw(a: Vec) -> Vec:
    """Rotate a quarter turn anticlockwise; the inner normal direction of an
    anticlockwise edge with direction ``a``."""
    return (-a[1], a[0])


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b)``."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


@dataclass(frozen=True)
class UnimodularMap:
    """An element of ``GL_2(Z)`` acting on column vectors."""

    rows: tuple[tuple[int, int], tuple[int, int]]

    def __post_init__(self) -> None:
        if self.det not in (1, -1):
            raise ValueError(f"matrix {self.rows} is not unimodular")

    @classmethod
    def identity(cls) -> "UnimodularMap":
        return cls(((1, 0), (0, 1)))

    @classmethod
    def of(cls, a: int, b: int, c: int, d: int) -> "UnimodularMap":
        return cls(((a, b), (c, d)))

    @property
    def det(self) -> int:
        (a, b), (c, d) = self.rows
        return a * d - b * c

    def apply(self, v: Sequence) -> tuple:
        (a, b), (c, d) = self.rows
        return (a * v[0] + b * v[1], c * v[0] + d * v[1])

    def __matmul__(self, other: "UnimodularMap") -> "UnimodularMap":
        (a, b), (c, d) = self.rows
        (e, f), (g, h) = other.rows
        return UnimodularMap(((a * e + b * g, a * f + b * h),
                              (c * e + d * g, c * f + d * h)))

    def inverse(self) -> "UnimodularMap":
        (a, b), (c, d) = self.rows
        det = self.det
        return UnimodularMap(((d * det, -b * det), (-c * det, a * det)))


def reflection_map() -> UnimodularMap:
    """A fixed determinant ``-1`` representative, ``diag(1, -1)``."""
    return UnimodularMap.of(1, 0, 0, -1)


# ---------------------------------------------------------------------------
# convex hulls
# ---------------------------------------------------------------------------

def convex_hull(points: Iterable[_V]) -> list[_V]:
    """Strict convex hull, anticlockwise, starting at the lexicographically
    smallest vertex.  Collinear non-extreme points are dropped.  Works for
    integer and ``Fraction`` coordinates alike.

    Raises :class:`DegeneratePolygonError` when the hull is not
    two-dimensional.
    """
    pts = sorted(set(tuple(p) for p in points))
    if len(pts) < 3:
        raise DegeneratePolygonError(f"need at least 3 distinct points, got {len(pts)}")

    def chain(seq):
        out: list = []
        for p in seq:
            while len(out) >= 2 and cross(vsub(out[-1], out[-2]), vsub(p, out[-2])) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise DegeneratePolygonError("points are collinear")
    return hull


def _cycle_signed_area2(cycle: Sequence) -> object:
    """Twice the signed area of an arbitrary closed vertex cycle."""
    total = 0
    for i, p in enumerate(cycle):
        q = cycle[(i + 1) % len(cycle)]
        total += cross(p, q)
    return total


def _rotate_to_min(cycle: list[_V]) -> tuple[_V, ...]:
    k = cycle.index(min(cycle))
    return tuple(cycle[k:] + cycle[:k])


# ---------------------------------------------------------------------------
# polygon types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BuildReport:
    """What :meth:`from_points` had to do to normalise its input."""

    reversed_input: bool = False
    dropped_points: int = 0


def _validate_cycle(vertices: tuple, kind: type) -> None:
    if len(vertices) < 3:
        raise DegeneratePolygonError("polygon needs at least 3 vertices")
    for v in vertices:
        if len(v) != 2 or not all(isinstance(c, kind) for c in v):
            raise PolygonError(f"bad vertex {v!r}")
    n = len(vertices)
    for i in range(n):
        e0 = vsub(vertices[(i + 1) % n], vertices[i])
        e1 = vsub(vertices[(i + 2) % n], vertices[(i + 1) % n])
        if cross(e0, e1) <= 0:
            raise PolygonError(
                f"vertex cycle is not strictly convex anticlockwise at index {i}")
    if vertices[0] != min(vertices):
        raise PolygonError("vertex cycle is not rotation-normalised")


class _PolygonBase:
    """Shared read-only behaviour of the two polygon types."""

    vertices: tuple

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    @cached_property
    def edges(self) -> tuple:
        """Directed edges ``(tail, head)`` in anticlockwise order, edge ``i``
        leaving vertex ``i``."""
        vs = self.vertices
        n = len(vs)
        return tuple((vs[i], vs[(i + 1) % n]) for i in range(n))

    def contains(self, p) -> bool:
        """Exact membership test (boundary counts as inside)."""
        for tail, head in self.edges:
            if cross(vsub(head, tail), vsub(p, tail)) < 0:
                return False
        return True

    def origin_interior(self) -> bool:
        return all(cross(tail, head) > 0 for tail, head in self.edges)


@dataclass(frozen=True)
class LatticePolygon(_PolygonBase):
    """A convex lattice polygon, stored anticlockwise and rotation-normalised."""

    vertices: tuple[Vec, ...]
    build: BuildReport = field(default_factory=BuildReport, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(tuple(v) for v in self.vertices))
        _validate_cycle(self.vertices, int)

    @classmethod
    def from_points(cls, points: Iterable[Vec]) -> "LatticePolygon":
        """Normalising constructor: convex hull, anticlockwise orientation,
        rotation anchor; what was fixed up is recorded in ``build``."""
        pts = [tuple(int(c) for c in p) for p in points]
        hull = convex_hull(pts)
        report = BuildReport(
            reversed_input=_cycle_signed_area2(pts) < 0,
            dropped_points=len(set(pts)) - len(hull),
        )
        return cls(_rotate_to_min(hull), report)

    def transformed(self, u: UnimodularMap) -> "LatticePolygon":
        """The image polygon ``u(P)`` (re-normalised)."""
        return LatticePolygon.from_points([u.apply(v) for v in self.vertices])

    def reflected(self) -> "LatticePolygon":
        return self.transformed(reflection_map())

    def negated(self) -> "LatticePolygon":
        return LatticePolygon.from_points([vneg(v) for v in self.vertices])


@dataclass(frozen=True)
class RationalPolygon(_PolygonBase):
    """A convex polygon with rational vertices, same normalisation rules."""

    vertices: tuple[QVec, ...]
    build: BuildReport = field(default_factory=BuildReport, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "vertices",
            tuple((Fraction(v[0]), Fraction(v[1])) for v in self.vertices))
        _validate_cycle(self.vertices, Fraction)

    @classmethod
    def from_points(cls, points: Iterable) -> "RationalPolygon":
        pts = [(Fraction(p[0]), Fraction(p[1])) for p in points]
        hull = convex_hull(pts)
        report = BuildReport(
            reversed_input=_cycle_signed_area2(pts) < 0,
            dropped_points=len(set(pts)) - len(hull),
        )
        return cls(_rotate_to_min(hull), report)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 and y.denominator == 1 for x, y in self.vertices)

    def to_lattice(self) -> LatticePolygon:
        if not self.is_integral():
            raise PolygonError("polygon has non-integer vertices")
        return LatticePolygon.from_points(
            [(int(x), int(y)) for x, y in self.vertices])


Polygon = LatticePolygon | RationalPolygon


# ---------------------------------------------------------------------------
# spec operations
# ---------------------------------------------------------------------------

def is_fano(p: LatticePolygon) -> bool:
    """Origin strictly interior and every vertex primitive."""
    return p.origin_interior() and all(is_primitive(v) for v in p.vertices)


def require_fano(p: LatticePolygon) -> None:
    if not is_fano(p):
        raise NotFanoError(f"polygon {list(p.vertices)} is not Fano")


def normalized_volume(p: Polygon):
    """Twice the Euclidean area: an integer for lattice polygons, a
    ``Fraction`` for rational ones."""
    return _cycle_signed_area2(p.vertices)


def boundary_lattice_point_count(p: LatticePolygon) -> int:
    return sum(content(vsub(head, tail)) for tail, head in p.edges)


def interior_lattice_point_count(p: LatticePolygon) -> int:
    # Pick's theorem: 2A = 2I + B - 2.
    return (normalized_volume(p) - boundary_lattice_point_count(p) + 2) // 2


def lattice_points(p: LatticePolygon, k: int = 1) -> list[Vec]:
    """All lattice points of the dilation ``k * p``, sorted; ``k == 0`` gives
    just the origin."""
    if k < 0:
        raise ValueError("dilation factor must be >= 0")
    if k == 0:
        return [(0, 0)]
    vxs = [v[0] for v in p.vertices]
    vys = [v[1] for v in p.vertices]
    return _kernels.scan_dilation_points(vxs, vys, k)


def dual(p: LatticePolygon) -> RationalPolygon:
    """The polar dual ``{u : u(v) >= -1 for all v in P}``; one rational vertex
    ``u_E / h_E`` per edge, anticlockwise."""
    if not p.origin_interior():
        raise UnboundedDualError("origin is not strictly interior")
    verts = []
    for tail, head in p.edges:
        normal = rot90ccw(primitive(vsub(head, tail)))
        height = -dot(normal, tail)
        verts.append((Fraction(normal[0], height), Fraction(normal[1], height)))
    return RationalPolygon.from_points(verts)


def dual_of_rational(q: RationalPolygon) -> RationalPolygon:
    """Polar dual of a rational polygon with the origin strictly interior."""
    if not q.origin_interior():
        raise UnboundedDualError("origin is not strictly interior")
    verts = []
    for tail, head in q.edges:
        det = cross(tail, head)
        verts.append(((tail[1] - head[1]) / det, (head[0] - tail[0]) / det))
    return RationalPolygon.from_points(verts)
