"""Text formats for polygons.

One polygon per line.  Lattice: ``[[x1,y1],[x2,y2],...]`` with integer
coordinates; rational: the same shape with reduced fractions ``p/q`` (the
``/q`` suffix omitted when the denominator is 1).  Serialisation is
canonical — no whitespace, reduced fractions, vertices in stored order — so
``parse(format(p))`` is the identity and ``format(parse(s)) == s`` for any
canonically formatted ``s``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .geometry import LatticePolygon, RationalPolygon

_NUM = r"-?\d+(?:/\d+)?"
_PAIR = rf"\[\s*{_NUM}\s*,\s*{_NUM}\s*\]"
_LINE = re.compile(rf"\[\s*{_PAIR}(?:\s*,\s*{_PAIR})*\s*\]")
_PAIR_RE = re.compile(rf"\[\s*({_NUM})\s*,\s*({_NUM})\s*\]")


class ParseError(ValueError):
    """Input text is not a well-formed polygon line."""


def _parse_pairs(text: str) -> list[tuple[Fraction, Fraction]]:
    s = text.strip()
    if not _LINE.fullmatch(s):
        raise ParseError(f"malformed polygon line: {text!r}")
    out = []
    for m in _PAIR_RE.finditer(s):
        try:
            out.append((Fraction(m.group(1)), Fraction(m.group(2))))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad coordinate in {text!r}: {exc}") from exc
    return out


def parse_lattice_polygon(text: str) -> LatticePolygon:
    pairs = _parse_pairs(text)
    for x, y in pairs:
        if x.denominator != 1 or y.denominator != 1:
            raise ParseError(f"expected integer coordinates, got {text!r}")
    return LatticePolygon.from_points([(int(x), int(y)) for x, y in pairs])


def parse_rational_polygon(text: str) -> RationalPolygon:
    return RationalPolygon.from_points(_parse_pairs(text))


def format_fraction(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_lattice_polygon(p: LatticePolygon) -> str:
    return "[" + ",".join(f"[{x},{y}]" for x, y in p.vertices) + "]"


def format_rational_polygon(p: RationalPolygon) -> str:
    return ("[" + ",".join(
        f"[{format_fraction(x)},{format_fraction(y)}]" for x, y in p.vertices) + "]")
