"""Degree-weighted adjacency spectra of trees and unicyclic graphs.

Builds weighted adjacency matrices (chiefly the arithmetic-geometric
weighting), computes spectral radii, full spectra, and characteristic
polynomials, enumerates all non-isomorphic trees and connected unicyclic
graphs of small order, and mechanically verifies the extremal bounds,
closed forms, certificates, and reference tables for the AG spectral
radius on those families.
"""

from .enumeration import (
    CANONICAL_MAX_N,
    ENUMERATION_MAX_N,
    canonical_form,
    canonical_graph,
    enumerate_trees,
    enumerate_unicyclic,
    family_counts,
)
from .graphio import (
    GRAPH6_MAX_N,
    Report,
    emit_report,
    graphs_to_graph6_lines,
    parse_edge_list,
    parse_graph6,
    render_report,
    write_graph6,
)
from .graphs import (
    Graph,
    NamedGraph,
    adjacency_masks,
    degrees,
    is_connected,
    is_tree,
    is_unicyclic,
    make_cycle,
    make_double_star,
    make_named,
    make_path,
    make_star,
    make_star_plus_edge,
    max_adjacent_degree_sum,
)
from .matrices import (
    IndexKind,
    WeightScheme,
    build_weighted,
    matrix_dominates,
    matrix_to_csv,
    topological_index,
)
from .spectra import (
    ConvergenceError,
    SpectralResult,
    char_poly,
    double_star_radius,
    full_spectrum,
    largest_root,
    path_charpoly_closed,
    spectral_radius,
)
from .verify import (
    CertificateReport,
    ExtremalReport,
    VerificationError,
    ag_matrix,
    ag_radius,
    case1_inequality,
    case1_value,
    lemma27_bound,
    match_char_poly,
    perron_certificate,
    radius_table,
    reproduce_table,
    search_unverifiable_claims,
    t1_root_bracket,
    verify_g234_positive,
    verify_g_positive,
    verify_lemma25,
    verify_proof_devices,
    verify_theorem4_case_split,
    verify_tree_extremes,
    verify_unicyclic_extremes,
)

__version__ = "0.1.0"

__all__ = [
    "CANONICAL_MAX_N",
    "ENUMERATION_MAX_N",
    "GRAPH6_MAX_N",
    "CertificateReport",
    "ConvergenceError",
    "ExtremalReport",
    "Graph",
    "IndexKind",
    "NamedGraph",
    "Report",
    "SpectralResult",
    "VerificationError",
    "WeightScheme",
    "adjacency_masks",
    "ag_matrix",
    "ag_radius",
    "build_weighted",
    "canonical_form",
    "canonical_graph",
    "case1_inequality",
    "case1_value",
    "char_poly",
    "degrees",
    "double_star_radius",
    "emit_report",
    "enumerate_trees",
    "enumerate_unicyclic",
    "family_counts",
    "full_spectrum",
    "graphs_to_graph6_lines",
    "is_connected",
    "is_tree",
    "is_unicyclic",
    "largest_root",
    "lemma27_bound",
    "make_cycle",
    "make_double_star",
    "make_named",
    "make_path",
    "make_star",
    "make_star_plus_edge",
    "match_char_poly",
    "matrix_dominates",
    "matrix_to_csv",
    "max_adjacent_degree_sum",
    "parse_edge_list",
    "parse_graph6",
    "path_charpoly_closed",
    "perron_certificate",
    "radius_table",
    "render_report",
    "reproduce_table",
    "search_unverifiable_claims",
    "spectral_radius",
    "t1_root_bracket",
    "topological_index",
    "verify_g234_positive",
    "verify_g_positive",
    "verify_lemma25",
    "verify_proof_devices",
    "verify_theorem4_case_split",
    "verify_tree_extremes",
    "verify_unicyclic_extremes",
    "write_graph6",
    "__version__",
]
