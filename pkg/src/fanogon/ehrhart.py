"""Lattice-point counts of dilated duals.

For a Fano polygon ``P`` the dual ``P*`` is a rational polygon, and the
series ``k -> |kP* ∩ M|`` is invariant under mutation, which makes it the
cheapest fingerprint for separating mutation classes.  Counting is done in
exact integer arithmetic by intersecting each row of a bounding box with
the half-space description ``u . v_j >= -k`` of ``kP*``.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import _kernels
from .geometry import LatticePolygon, dual, require_fano


class NotApplicableError(ValueError):
    """The polygon lacks the structure a series-reading routine needs."""


def _dual_row_bounds(p: LatticePolygon, k: int) -> tuple[int, int, int, int]:
    """Integer bounding box of ``k * dual(p)``."""
    q = dual(p)
    xs = [k * v[0] for v in q.vertices]
    ys = [k * v[1] for v in q.vertices]
    return (math.floor(min(xs)), math.ceil(max(xs)),
            math.floor(min(ys)), math.ceil(max(ys)))


def dual_dilation_count(p: LatticePolygon, k: int) -> int:
    """``|k * dual(p) ∩ M|`` for a single dilation ``k >= 0``."""
    require_fano(p)
    if k < 0:
        raise ValueError("dilation factor must be non-negative")
    if k == 0:
        return 1
    vxs = [v[0] for v in p.vertices]
    vys = [v[1] for v in p.vertices]
    x0, x1, y0, y1 = _dual_row_bounds(p, k)
    return _kernels.count_dual_points(vxs, vys, k, x0, x1, y0, y1)


def dual_dilation_counts(p: LatticePolygon, kmax: int) -> tuple[int, ...]:
    """The count series ``(|0P* ∩ M|, |1P* ∩ M|, ..., |kmax P* ∩ M|)``."""
    return tuple(dual_dilation_count(p, k) for k in range(kmax + 1))


def dual_dilation_points(p: LatticePolygon, k: int) -> list[tuple[int, int]]:
    """The lattice points of ``k * dual(p)``, sorted."""
    require_fano(p)
    if k < 0:
        raise ValueError("dilation factor must be non-negative")
    if k == 0:
        return [(0, 0)]
    vxs = [v[0] for v in p.vertices]
    vys = [v[1] for v in p.vertices]
    x0, x1, y0, y1 = _dual_row_bounds(p, k)
    return _kernels.list_dual_points(vxs, vys, k, x0, x1, y0, y1)


def dual_volume(p: LatticePolygon) -> Fraction:
    """Normalized volume (twice the Euclidean area) of the dual polygon."""
    require_fano(p)
    q = dual(p)
    total = Fraction(0)
    vs = q.vertices
    for i, tail in enumerate(vs):
        head = vs[(i + 1) % len(vs)]
        total += tail[0] * head[1] - tail[1] * head[0]
    return total


def _first_jumps(counts: tuple[int, ...]) -> list[tuple[int, int]]:
    """``(k, counts[k])`` at every ``k >= 1`` where the count increases."""
    jumps = []
    for k in range(1, len(counts)):
        if counts[k] > counts[k - 1]:
            jumps.append((k, counts[k]))
    return jumps


def heights_from_series(p: LatticePolygon) -> tuple[int, ...]:
    """Read long-edge heights off the jump positions of the dual count
    series of a symmetric Fano polygon.

    For a centrally symmetric polygon with two non-parallel long edges the
    count stays at ``1`` below the smallest long-edge height ``h1``, jumps
    to ``3`` there (an antipodal pair of dual boundary points), and to
    ``5`` at the second height ``h2``; ``(h1, h2)`` is returned, with a
    direct jump ``1 -> 5`` when ``h1 = h2``.  For a polygon with a
    three-fold rotational symmetry the first nonzero dual points form one
    orbit of size three, the series jumps ``1 -> 4`` at the long-edge
    height ``h``, and ``(h,)`` is returned.  Either way the jump pattern
    is checked in full against the directly computed edge heights and any
    disagreement raises.
    """
    from .edges import directed_sc, edge_metrics
    from .symmetry import is_3_symmetric, is_centrally_symmetric

    require_fano(p)
    if not directed_sc(p).basket:
        raise NotApplicableError(
            "height recovery needs a non-empty residual basket")
    metrics = edge_metrics(p)
    long_heights = sorted(m.height for m in metrics if m.is_long)
    if not long_heights:
        raise NotApplicableError("height recovery needs a long edge")
    central = is_centrally_symmetric(p)
    threefold = is_3_symmetric(p)

    if threefold:
        h = long_heights[0]
        counts = dual_dilation_counts(p, h)
        first = 7 if central else 4
        if any(c != 1 for c in counts[:h]) or counts[h] != first:
            raise ValueError(
                f"count series {counts} does not show the single jump "
                f"1 -> {first} at k = {h}")
        return (h,)

    if not central:
        raise NotApplicableError(
            "height recovery needs a centrally symmetric or three-fold "
            "symmetric polygon")
    # Long edges of a centrally symmetric polygon come in antipodal pairs
    # of equal height; distinct pairs never share a normal direction, so
    # "two non-parallel long edges" means at least two pairs.
    half = len(metrics) // 2
    pair_heights = sorted(m.height for m in metrics if m.is_long and m.index < half)
    if len(pair_heights) < 2:
        raise NotApplicableError(
            "height recovery needs two non-parallel long edges")
    h1, h2 = pair_heights[0], pair_heights[1]
    counts = dual_dilation_counts(p, h2)
    ok = all(c == 1 for c in counts[1:h1]) and counts[h2] == 5 and (
        h1 == h2 or (counts[h1] == 3 and all(c == 3 for c in counts[h1:h2])))
    if not ok:
        raise ValueError(
            f"count series {counts} does not show jumps 1 -> 3 at k = {h1} "
            f"and 3 -> 5 at k = {h2}")
    return (h1, h2)
