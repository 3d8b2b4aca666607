"""linforest: exact verification of minimum-degree linear-forest theorems.

The package decides linear-forest containment exactly on small graphs,
generates every exceptional family from the classification theorems,
recognizes membership in them, and exhaustively certifies the theorems over
all graphs of a given order via isomorph-free enumeration.
"""

__version__ = "0.1.0"

from .canon import are_isomorphic, canonical_g6, canonical_label
from .enumeration import EnumFilter, enumerate_graphs, ingest_graph6_stream
from .families import FamilySpec, family_size_formulas, generate_family
from .forests import LinearForest, TheoremClass, forest_params, parse_forest
from .graph6 import parse_graph6, write_graph6
from .graphs import (
    Graph,
    block_decomposition,
    block_path_order,
    complement,
    complete,
    connectivity_report,
    cycle,
    degree_profile,
    disjoint_union,
    empty_graph,
    join,
    path,
)
from .recognizers import FamilyMatch, recognize_exception, vertex_cover_at_most
from .subgraphs import (
    EmbeddingCertificate,
    common_neighborhood_find,
    contains_linear_forest,
    longest_cycle,
    longest_path,
    monomorphism_exists,
)
from .verifier import (
    SweepReport,
    Verdict,
    classify,
    eg_edge_bound_check,
    sharpness_demo,
    sweep_theorem,
    turan_search,
    two_odd_threshold,
    verify_lemma,
)

__all__ = [
    "EnumFilter", "EmbeddingCertificate", "FamilyMatch", "FamilySpec", "Graph",
    "LinearForest", "SweepReport", "TheoremClass", "Verdict",
    "are_isomorphic", "block_decomposition", "block_path_order",
    "canonical_g6", "canonical_label", "classify", "common_neighborhood_find",
    "complement", "complete", "connectivity_report", "contains_linear_forest",
    "cycle", "degree_profile", "disjoint_union", "eg_edge_bound_check",
    "empty_graph", "enumerate_graphs", "family_size_formulas", "forest_params",
    "generate_family", "ingest_graph6_stream", "join", "longest_cycle",
    "longest_path", "monomorphism_exists", "parse_forest", "parse_graph6",
    "path", "recognize_exception", "sharpness_demo", "sweep_theorem",
    "turan_search", "two_odd_threshold", "verify_lemma", "vertex_cover_at_most",
    "write_graph6",
]
