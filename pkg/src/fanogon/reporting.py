"""Aggregate JSON analysis reports for single polygons.

The report is a plain dict, ready for ``json.dumps``: every value is a
bool, int, string, list, or nested dict — never a float.  Exact rational
values (the dual barycentre) are rendered as reduced ``p/q`` strings.
"""

from __future__ import annotations

from .barycentric import type_bk
from .edges import directed_sc, edge_metrics
from .geometry import LatticePolygon, is_fano
from .io import format_fraction
from .mutation import is_minimal
from .symmetry import (
    automorphism_group,
    dual_barycentre,
    is_3_symmetric,
    is_centrally_symmetric,
    is_ke,
    is_symmetric,
    ke_triangle_normal_form,
    lattice_index,
    weight_matrix,
    weights,
)


def _edge_table(p: LatticePolygon) -> list[dict]:
    table = []
    for m in edge_metrics(p):
        table.append({
            "index": m.index,
            "tail": list(m.tail),
            "head": list(m.head),
            "length": m.length,
            "height": m.height,
            "normal": list(m.normal),
            "hnf": m.hnf.to_json(),
            "long": m.is_long,
            "pure": m.is_pure,
            "residue": None if m.residue is None else m.residue.to_json(),
        })
    return table


def analysis_report(p: LatticePolygon, bk_cap: int = 20) -> dict:
    """Everything the library can say about one polygon, as one JSON-ready
    dict.

    Non-Fano input yields ``{"fano": false, "vertices": [...]}`` — the
    remaining fields are only defined for Fano polygons.
    """
    report: dict = {
        "fano": is_fano(p),
        "vertices": [list(v) for v in p.vertices],
    }
    if not report["fano"]:
        return report

    aut = automorphism_group(p)
    symmetric = is_symmetric(p)
    ke = is_ke(p)
    bary = dual_barycentre(p)
    report.update({
        "symmetric": symmetric,
        "centrally_symmetric": is_centrally_symmetric(p),
        "three_symmetric": is_3_symmetric(p),
        "ke": ke,
        "minimal": is_minimal(p),
        "aut_order": len(aut.elements),
        "index": lattice_index(p),
        "dual_barycentre": [format_fraction(bary[0]), format_fraction(bary[1])],
        "directed_sc": directed_sc(p).to_json(),
        "edge_table": _edge_table(p),
    })
    if len(p.vertices) == 3:
        report["weights"] = list(weights(p))
        nf = ke_triangle_normal_form(p)
        report["ke_triangle_normal_form"] = None if nf is None else list(nf)
    elif len(p.vertices) == 4:
        report["weight_matrix"] = [list(row) for row in weight_matrix(p)]

    bk = type_bk(p, cap=bk_cap)
    report["bk"] = {
        "strict_type": bk.strict_type,
        "cap": bk.cap,
        "symmetric_certificate_at": bk.symmetric_certificate_at,
    }

    assert not symmetric or ke, "symmetric polygons must certify as KE"
    return report
