"""Edge cones, their normal forms, and directed singularity content.

Every edge ``E`` of a Fano polygon spans a cone over its two endpoints; the
oriented Hermite normal form of that cone,

    ``H = (1 a; 0 r)``  with  ``0 <= a < r``,  ``gcd(a, r) = 1``,

is a complete invariant under orientation-preserving changes of basis, and
``r`` always factors as ``length * height`` of the edge.  Decomposing each
edge length as ``l = n*h + l~`` with ``0 <= l~ < h`` splits the cone into
``n`` trivial (smoothable) pieces plus, when ``l~ > 0``, a residual short
cone; the residual cones collected anticlockwise, together with the total
``n``, form the directed singularity content — the basic mutation invariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .canonical import cone_normal_map
from .geometry import (
    LatticePolygon,
    content,
    cross,
    dot,
    is_primitive,
    primitive,
    require_fano,
    rot90ccw,
    vscale,
    vsub,
)


@dataclass(frozen=True, order=True)
class ConeHNF:
    """Oriented Hermite normal form ``(1 a; 0 r)`` of a two-dimensional
    pointed lattice cone."""

    a: int
    r: int

    def __post_init__(self) -> None:
        from math import gcd
        if self.r < 1 or not 0 <= self.a < self.r or gcd(self.a, self.r) != 1:
            raise ValueError(f"invalid cone normal form (a={self.a}, r={self.r})")

    @classmethod
    def of_cone(cls, v0, v1) -> "ConeHNF":
        """Normal form of the cone spanned by ``v0, v1`` (anticlockwise,
        i.e. ``cross(v0, v1) > 0``); imprimitive generators are replaced by
        their primitive representatives."""
        a, r, _ = cone_normal_map(primitive(v0), primitive(v1))
        return cls(a, r)

    def conjugate(self) -> "ConeHNF":
        """Normal form of the same cone read in an orientation-reversing
        basis: ``a* = a^(-1) mod r``."""
        return ConeHNF(pow(self.a, -1, self.r), self.r)

    def singularity_type(self) -> tuple[int, int]:
        """The cyclic quotient type ``1/r (1, c)`` with ``c = -a mod r``."""
        return (self.r, (-self.a) % self.r)

    def generators(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """The defining rays ``(1, 0)`` and ``(a, r)``."""
        return ((1, 0), (self.a, self.r))

    def edge_length_height(self) -> tuple[int, int]:
        """Length and height of the segment joining the two primitive
        generators (their product is ``r``)."""
        length = content(vsub((self.a, self.r), (1, 0)))
        return length, self.r // length

    def is_short(self) -> bool:
        length, height = self.edge_length_height()
        return length < height

    def to_json(self) -> list[int]:
        return [self.a, self.r]


@dataclass(frozen=True)
class EdgeMetrics:
    """Everything the library needs to know about one edge of a Fano
    polygon."""

    index: int
    tail: tuple[int, int]
    head: tuple[int, int]
    direction: tuple[int, int]   # primitive, anticlockwise
    length: int                  # lattice points on the edge minus one
    normal: tuple[int, int]      # primitive inner normal
    height: int                  # -normal(edge)
    hnf: ConeHNF

    @property
    def is_long(self) -> bool:
        return self.length >= self.height

    @property
    def is_pure(self) -> bool:
        return self.length % self.height == 0

    @property
    def t_count(self) -> int:
        """Number of trivial (smoothable) pieces in the edge decomposition."""
        return self.length // self.height

    @cached_property
    def residue(self) -> ConeHNF | None:
        """Normal form of the residual cone, or ``None`` for a pure edge.

        The residue is taken over the sub-segment of residual length at the
        anticlockwise end of the edge; the clockwise placement differs by a
        shear along the edge and yields the same normal form.
        """
        stub = self.length % self.height
        if stub == 0:
            return None
        start = vsub(self.head, vscale(stub, self.direction))
        # Sub-segment endpoints are congruent to the edge endpoints modulo
        # the height, hence primitive exactly like them.
        assert is_primitive(start) and is_primitive(self.head)
        return ConeHNF.of_cone(start, self.head)


def edge_metrics(p: LatticePolygon) -> tuple[EdgeMetrics, ...]:
    """Metrics for every edge, anticlockwise, edge ``i`` leaving vertex
    ``i`` of the stored cycle.  Requires a Fano polygon."""
    require_fano(p)
    out = []
    for i, (tail, head) in enumerate(p.edges):
        step = vsub(head, tail)
        length = content(step)
        direction = primitive(step)
        normal = rot90ccw(direction)
        height = -dot(normal, tail)
        assert height > 0 and cross(tail, head) == length * height
        out.append(EdgeMetrics(
            index=i, tail=tail, head=head, direction=direction, length=length,
            normal=normal, height=height, hnf=ConeHNF.of_cone(tail, head)))
    return tuple(out)


def edge_data(p: LatticePolygon) -> tuple[ConeHNF, ...]:
    """The cyclic sequence of edge-cone normal forms, anticlockwise."""
    return tuple(m.hnf for m in edge_metrics(p))


def edge_sc(m: EdgeMetrics) -> tuple[int, ConeHNF | None]:
    """Singularity content of a single edge: ``(n, residue)``."""
    return m.t_count, m.residue


@dataclass(frozen=True)
class DirectedSC:
    """Directed singularity content: total trivial-piece count plus the
    anticlockwise cyclic basket of residual cones."""

    n: int
    basket: tuple[ConeHNF, ...]

    def __eq__(self, other) -> bool:
        if not isinstance(other, DirectedSC):
            return NotImplemented
        return self.n == other.n and cyclic_equal(self.basket, other.basket)

    def __hash__(self) -> int:
        # Rotation-invariant: hash the lexicographically smallest rotation.
        if not self.basket:
            return hash((self.n, ()))
        rotations = [self.basket[i:] + self.basket[:i] for i in range(len(self.basket))]
        return hash((self.n, min(rotations)))

    def to_json(self) -> dict:
        return {"n": self.n, "basket": [c.to_json() for c in self.basket]}


def directed_sc(p: LatticePolygon) -> DirectedSC:
    """The directed singularity content of a Fano polygon."""
    metrics = edge_metrics(p)
    n = sum(m.t_count for m in metrics)
    basket = tuple(m.residue for m in metrics if m.residue is not None)
    return DirectedSC(n, basket)


def cyclic_equal(a: tuple, b: tuple) -> bool:
    """Whether two sequences agree up to cyclic rotation."""
    if len(a) != len(b):
        return False
    if not a:
        return True
    return any(b[i:] + b[:i] == a for i in range(len(b)))


def cyclic_period(seq: tuple) -> int:
    """Smallest ``d`` dividing ``len(seq)`` with ``seq`` equal to its
    rotation by ``d``."""
    n = len(seq)
    for d in range(1, n + 1):
        if n % d == 0 and seq[d:] + seq[:d] == seq:
            return d
    return n
