"""Parsing and formatting of polygon lines must round-trip exactly and
reject malformed input with ParseError."""

from fractions import Fraction

import pytest

from fanogon import (
    LatticePolygon,
    ParseError,
    RationalPolygon,
    format_fraction,
    format_lattice_polygon,
    format_rational_polygon,
    parse_lattice_polygon,
    parse_rational_polygon,
)


class TestParse:
    def test_basic_lattice(self):
        p = parse_lattice_polygon("[[1,0],[0,1],[-1,-1]]")
        assert p == LatticePolygon.from_points([(1, 0), (0, 1), (-1, -1)])

    def test_whitespace_tolerated(self):
        p = parse_lattice_polygon("  [ [1, 0] , [0,1] , [-1,-1] ]  ")
        assert p == LatticePolygon.from_points([(1, 0), (0, 1), (-1, -1)])

    def test_rational_coordinates(self):
        q = parse_rational_polygon("[[1/2,0],[0,1],[-1,-1]]")
        assert (Fraction(1, 2), Fraction(0)) in q.vertices

    def test_lattice_rejects_fractions(self):
        with pytest.raises(ParseError):
            parse_lattice_polygon("[[1/2,0],[0,1],[-1,-1]]")

    @pytest.mark.parametrize("bad", [
        "",
        "nonsense",
        "[[1,0],[0,1]",
        "[[1],[0,1],[-1,-1]]",
        "[[1,0,3],[0,1],[-1,-1]]",
        "[[1,0];[0,1];[-1,-1]]",
        "[[1.5,0],[0,1],[-1,-1]]",
        "[[1/0,0],[0,1],[-1,-1]]",
    ])
    def test_malformed_raises(self, bad):
        with pytest.raises(ParseError):
            parse_lattice_polygon(bad)

    def test_degenerate_is_not_a_parse_error(self):
        # well-formed text with a degenerate point set raises the
        # polygon error, not ParseError
        from fanogon import DegeneratePolygonError

        with pytest.raises(DegeneratePolygonError):
            parse_lattice_polygon("[[0,0],[1,1],[2,2]]")


class TestFormat:
    def test_format_fraction(self):
        assert format_fraction(Fraction(3)) == "3"
        assert format_fraction(Fraction(-508, 819)) == "-508/819"
        assert format_fraction(5) == "5"
        assert format_fraction(Fraction(4, 2)) == "2"

    def test_lattice_roundtrip(self, mixed_polygons):
        for p in mixed_polygons[:80]:
            line = format_lattice_polygon(p)
            assert parse_lattice_polygon(line) == p

    def test_rational_roundtrip(self, fano_polygons):
        from fanogon import dual

        for p in fano_polygons[:40]:
            q = dual(p)
            line = format_rational_polygon(q)
            back = parse_rational_polygon(line)
            assert back.vertices == q.vertices

    def test_rational_format_reduces(self):
        q = RationalPolygon.from_points(
            [(Fraction(2, 4), 0), (0, 1), (-1, -1)]
        )
        assert "1/2" in format_rational_polygon(q)
