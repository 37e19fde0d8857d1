"""The aggregate per-polygon analysis report: key inventory, triangle and
quadrilateral extras, and internal consistency against the library calls
it summarizes."""

import json
from fractions import Fraction

from fanogon import (
    LatticePolygon,
    analysis_report,
    automorphism_group,
    directed_sc,
    dual_barycentre,
    is_fano,
    is_ke,
    is_symmetric,
    ke_triangle_normal_form,
    lattice_index,
    weight_matrix,
    weights,
)
from fanogon.edges import edge_metrics

import oracles

P2 = LatticePolygon.from_points([(1, 0), (0, 1), (-1, -1)])
SQUARE = LatticePolygon.from_points([(1, 1), (-1, 1), (-1, -1), (1, -1)])
TRI_3_7_13 = LatticePolygon.from_points([(-1, -5), (1, 2), (-1, 2)])

BASE_KEYS = {
    "fano", "vertices", "symmetric", "centrally_symmetric",
    "three_symmetric", "ke", "minimal", "aut_order", "index",
    "dual_barycentre", "directed_sc", "edge_table", "bk",
}


class TestShape:
    def test_fano_triangle_keys(self):
        rep = analysis_report(P2)
        assert BASE_KEYS | {"weights", "ke_triangle_normal_form"} == set(rep)
        assert rep["fano"]
        assert rep["weights"] == [1, 1, 1]
        assert rep["ke_triangle_normal_form"] == [1, 1]

    def test_fano_quadrilateral_keys(self):
        rep = analysis_report(SQUARE)
        assert BASE_KEYS | {"weight_matrix"} == set(rep)
        assert rep["weight_matrix"] == [list(r) for r in weight_matrix(SQUARE)]

    def test_non_triangle_non_quad_keys(self):
        hexa = LatticePolygon.from_points(
            [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)])
        rep = analysis_report(hexa)
        assert set(rep) == BASE_KEYS

    def test_non_fano_is_short(self):
        p = LatticePolygon.from_points([(2, 0), (0, 1), (-1, -1)])
        assert not is_fano(p)
        rep = analysis_report(p)
        assert rep == {"fano": False, "vertices": [list(v) for v in p.vertices]}

    def test_json_serializable(self, mixed_polygons):
        for p in mixed_polygons[:25]:
            json.dumps(analysis_report(p))


class TestConsistency:
    def test_flags_match_library(self, mixed_polygons):
        for p in mixed_polygons[:40]:
            rep = analysis_report(p)
            assert rep["symmetric"] == is_symmetric(p)
            assert rep["ke"] == is_ke(p)
            assert rep["aut_order"] == len(automorphism_group(p).elements)
            assert rep["index"] == lattice_index(p)
            assert rep["directed_sc"] == directed_sc(p).to_json()
            if len(p.vertices) == 3:
                assert rep["weights"] == list(weights(p))
                nf = ke_triangle_normal_form(p)
                assert rep["ke_triangle_normal_form"] == (
                    None if nf is None else list(nf))

    def test_dual_barycentre_strings(self):
        rep = analysis_report(TRI_3_7_13)
        bx, by = dual_barycentre(TRI_3_7_13)
        want = [
            str(bx) if bx.denominator > 1 else str(bx.numerator),
            str(by) if by.denominator > 1 else str(by.numerator),
        ]
        assert rep["dual_barycentre"] == want
        # round-trips through Fraction
        assert Fraction(rep["dual_barycentre"][0]) == bx
        assert Fraction(rep["dual_barycentre"][1]) == by

    def test_edge_table(self):
        rep = analysis_report(TRI_3_7_13)
        table = rep["edge_table"]
        ms = edge_metrics(TRI_3_7_13)
        assert len(table) == len(ms) == 3
        verts = TRI_3_7_13.vertices
        for row, m in zip(table, ms):
            assert row["index"] == m.index
            assert tuple(row["tail"]) == m.tail
            assert tuple(row["head"]) == m.head
            want_len, want_h = oracles.edge_length_and_height(
                m.tail, m.head)
            assert row["length"] == want_len
            assert row["height"] == want_h
            # ties count as long: an edge is short only when strictly
            # shorter than its height
            assert row["long"] == (m.length >= m.height)
        # edges chain around the polygon
        heads = [tuple(r["head"]) for r in table]
        tails = [tuple(r["tail"]) for r in table]
        assert set(heads) == set(verts) == set(tails)

    def test_bk_summary(self):
        rep = analysis_report(P2, bk_cap=5)
        bk = rep["bk"]
        assert bk["cap"] == 5
        # the standard triangle is symmetric, certified immediately
        assert bk["symmetric_certificate_at"] == 0
        assert bk["strict_type"] == ">=cap"

    def test_bk_strict(self):
        rep = analysis_report(TRI_3_7_13, bk_cap=8)
        bk = rep["bk"]
        assert isinstance(bk["strict_type"], int)
        assert bk["symmetric_certificate_at"] is None
