"""fanogon: exact-arithmetic toolkit for Fano lattice polygons.

Mutations and mutation-equivalence classes, directed singularity content,
symmetry and Kahler-Einstein certification, barycentric transformations,
dual-dilation (Ehrhart-style) counting, and a family of explicit
constructions — all in exact integer / rational arithmetic.
"""

from .geometry import (
    BuildReport,
    DegeneratePolygonError,
    LatticePolygon,
    NotFanoError,
    PolygonError,
    RationalPolygon,
    UnboundedDualError,
    UnimodularMap,
    boundary_lattice_point_count,
    dual,
    dual_of_rational,
    is_fano,
    lattice_points,
    normalized_volume,
)
from .canonical import CanonicalKey, are_equivalent, canonical_form, canonical_key
from .io import (
    ParseError,
    format_fraction,
    format_lattice_polygon,
    format_rational_polygon,
    parse_lattice_polygon,
    parse_rational_polygon,
)
from .edges import (
    ConeHNF,
    DirectedSC,
    EdgeMetrics,
    directed_sc,
    edge_data,
    edge_metrics,
    edge_sc,
)
from .mutation import (
    MutationClass,
    MutationSpec,
    NoFactorError,
    count_distinguished,
    enumerate_mutations,
    explore_class,
    factor_exists,
    graded_slices,
    is_minimal,
    mutate,
    mutate_with_remainders,
)
from .symmetry import (
    AutGroup,
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
from .barycentric import (
    AT_LEAST_CAP,
    BkReport,
    DegenerateSumError,
    bary_transform,
    type_bk,
)
from .constructions import (
    InvalidParametersError,
    QuadParams,
    RefinedPolygon,
    SearchHit,
    make_phk,
    params_to_weight_matrix,
    quad_constraints_hold,
    refine_lattice,
    search_ke_quads,
    weight_matrix_to_polygon,
)
from .ehrhart import (
    NotApplicableError,
    dual_dilation_count,
    dual_dilation_counts,
    dual_volume,
    heights_from_series,
)
from .reporting import analysis_report

__version__ = "0.1.0"

__all__ = [
    "AT_LEAST_CAP",
    "AutGroup",
    "BkReport",
    "BuildReport",
    "CanonicalKey",
    "ConeHNF",
    "DegeneratePolygonError",
    "DegenerateSumError",
    "DirectedSC",
    "EdgeMetrics",
    "InvalidParametersError",
    "LatticePolygon",
    "MutationClass",
    "MutationSpec",
    "NoFactorError",
    "NotApplicableError",
    "NotFanoError",
    "ParseError",
    "PolygonError",
    "QuadParams",
    "RationalPolygon",
    "RefinedPolygon",
    "SearchHit",
    "UnboundedDualError",
    "UnimodularMap",
    "analysis_report",
    "are_equivalent",
    "automorphism_group",
    "bary_transform",
    "boundary_lattice_point_count",
    "canonical_form",
    "canonical_key",
    "count_distinguished",
    "directed_sc",
    "dual",
    "dual_barycentre",
    "dual_dilation_count",
    "dual_dilation_counts",
    "dual_of_rational",
    "dual_volume",
    "edge_data",
    "edge_metrics",
    "edge_sc",
    "enumerate_mutations",
    "explore_class",
    "factor_exists",
    "format_fraction",
    "format_lattice_polygon",
    "format_rational_polygon",
    "graded_slices",
    "heights_from_series",
    "is_3_symmetric",
    "is_centrally_symmetric",
    "is_fano",
    "is_ke",
    "is_minimal",
    "is_symmetric",
    "ke_triangle_normal_form",
    "lattice_index",
    "lattice_points",
    "make_phk",
    "mutate",
    "mutate_with_remainders",
    "normalized_volume",
    "params_to_weight_matrix",
    "parse_lattice_polygon",
    "parse_rational_polygon",
    "quad_constraints_hold",
    "refine_lattice",
    "search_ke_quads",
    "type_bk",
    "weight_matrix",
    "weight_matrix_to_polygon",
    "weights",
]
