"""Pure-Python reference kernels for the integer scan loops.

Each function has a compiled twin in ``_speed.pyx`` with identical semantics;
these versions carry no magnitude restrictions (Python integers throughout)
and serve both as the fallback backend and as the correctness oracle for the
compiled one.
"""

from __future__ import annotations


def _ceil_div(a: int, b: int) -> int:
    # b > 0
    return -((-a) // b)


def _row_interval(lo: int, hi: int, coeffs, bounds, y: int):
    """Intersect ``[lo, hi]`` with ``{x : a*x >= c - b*y}`` for each
    ``(a, b)`` in ``coeffs`` with bound ``c``; returns (lo, hi) possibly
    empty (lo > hi)."""
    for (a, b), c in zip(coeffs, bounds):
        rhs = c - b * y
        if a > 0:
            lo = max(lo, _ceil_div(rhs, a))
        elif a < 0:
            hi = min(hi, rhs // a)
        elif rhs > 0:
            return 1, 0
        if lo > hi:
            return lo, hi
    return lo, hi


def _dilation_rows(vxs, vys, k):
    n = len(vxs)
    coeffs = []
    bounds = []
    for i in range(n):
        ax, ay = k * vxs[i], k * vys[i]
        ex = k * vxs[(i + 1) % n] - ax
        ey = k * vys[(i + 1) % n] - ay
        # cross(E, p - A) >= 0  <=>  (-ey) * px + ex * py >= ex * ay - ey * ax
        coeffs.append((-ey, ex))
        bounds.append(ex * ay - ey * ax)
    x0 = k * min(vxs)
    x1 = k * max(vxs)
    y0 = k * min(vys)
    y1 = k * max(vys)
    return coeffs, bounds, x0, x1, y0, y1


def scan_dilation_points(vxs, vys, k):
    """Lattice points of ``k * P`` for an anticlockwise vertex cycle."""
    coeffs, bounds, x0, x1, y0, y1 = _dilation_rows(vxs, vys, k)
    out = []
    for y in range(y0, y1 + 1):
        lo, hi = _row_interval(x0, x1, coeffs, bounds, y)
        out.extend((x, y) for x in range(lo, hi + 1))
    out.sort()
    return out


def _dual_coeffs(vxs, vys, k):
    # u . v_j >= -k  <=>  vx_j * ux + vy_j * uy >= -k
    coeffs = [(vx, vy) for vx, vy in zip(vxs, vys)]
    bounds = [-k] * len(vxs)
    return coeffs, bounds


def count_dual_points(vxs, vys, k, x0, x1, y0, y1):
    """Count lattice ``u`` in the box with ``u(v_j) >= -k`` for all ``j``."""
    coeffs, bounds = _dual_coeffs(vxs, vys, k)
    total = 0
    for y in range(y0, y1 + 1):
        lo, hi = _row_interval(x0, x1, coeffs, bounds, y)
        if hi >= lo:
            total += hi - lo + 1
    return total


def list_dual_points(vxs, vys, k, x0, x1, y0, y1):
    """Like :func:`count_dual_points` but returning the sorted points."""
    coeffs, bounds = _dual_coeffs(vxs, vys, k)
    out = []
    for y in range(y0, y1 + 1):
        lo, hi = _row_interval(x0, x1, coeffs, bounds, y)
        out.extend((x, y) for x in range(lo, hi + 1))
    out.sort()
    return out
