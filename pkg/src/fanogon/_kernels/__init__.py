"""Kernel dispatch: compiled fast path with a pure-Python fallback.

The compiled extension works in C ``long long`` arithmetic, so it is only
used when every input is comfortably inside the overflow-safe range; larger
inputs (and environments where the extension failed to build, or where
``FANOGON_PURE_KERNELS=1`` is set) transparently take the pure path, which
uses Python integers and has no size limit.
"""

from __future__ import annotations

import os

from . import pure

try:
    from . import _speed  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - depends on the build environment
    _speed = None

_FORCE_PURE = os.environ.get("FANOGON_PURE_KERNELS") == "1"

# With |coord| <= 1e6, k <= 1e6 and box bounds <= 1e7 every intermediate
# product in the kernels stays far below 2**62.
_SAFE_COORD = 10**6
_SAFE_BOX = 10**7


def backend() -> str:
    """Name of the backend the dispatcher will prefer."""
    return "compiled" if (_speed is not None and not _FORCE_PURE) else "pure"


def _ints_ok(values, limit) -> bool:
    return all(-limit <= v <= limit for v in values)


def _pick(coords_ok: bool):
    if _speed is not None and not _FORCE_PURE and coords_ok:
        return _speed
    return pure


def scan_dilation_points(vxs, vys, k):
    ok = k <= _SAFE_COORD and _ints_ok(vxs, _SAFE_COORD) and _ints_ok(vys, _SAFE_COORD)
    return _pick(ok).scan_dilation_points(list(vxs), list(vys), k)


def count_dual_points(vxs, vys, k, x0, x1, y0, y1):
    ok = (k <= _SAFE_COORD and _ints_ok(vxs, _SAFE_COORD) and _ints_ok(vys, _SAFE_COORD)
          and _ints_ok((x0, x1, y0, y1), _SAFE_BOX))
    return _pick(ok).count_dual_points(list(vxs), list(vys), k, x0, x1, y0, y1)


def list_dual_points(vxs, vys, k, x0, x1, y0, y1):
    ok = (k <= _SAFE_COORD and _ints_ok(vxs, _SAFE_COORD) and _ints_ok(vys, _SAFE_COORD)
          and _ints_ok((x0, x1, y0, y1), _SAFE_BOX))
    return _pick(ok).list_dual_points(list(vxs), list(vys), k, x0, x1, y0, y1)
