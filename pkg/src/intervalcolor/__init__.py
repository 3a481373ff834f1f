"""Exact toolkit for interval edge-colorings of simple graphs.

Validate colorings, compute the maximum palette size W(G) by exact search,
lift colorings through the bipartite doubling construction, and audit the
registered upper bounds against exhaustively enumerated small graphs.
"""

from .bounds import (
    BoundClaim,
    BoundReport,
    applicable_bounds,
    audit,
    best_upper_bound,
)
from .catalog import generate_connected_catalog, minimum_adjacency_encoding
from .coloring import (
    EdgeColoring,
    SpectrumReport,
    ValidationReport,
    coloring_from_json,
    coloring_to_json,
    incident_colors,
    spectrum,
    spectrum_report,
    validate_interval,
)
from .doubling import (
    DoublingCertificate,
    DoublingResult,
    certificate_to_json,
    double_graph,
    double_with_certificate,
    finalize_recolor,
    lift_coloring,
)
from .errors import DomainError, InternalInvariantError, InvalidColoringError, ParseError
from .graph import (
    Graph,
    GraphClass,
    classify,
    is_connected,
    parse_edge_list,
    parse_graph6,
    write_graph6,
)
from .solver import (
    SearchLimits,
    SolveOutcome,
    SolveStatus,
    brute_force_W,
    compute_W,
    find_interval_coloring,
)
from .survey import SurveyRecord, run_survey, survey_graph, write_survey_csv

__version__ = "0.1.0"

__all__ = [
    "BoundClaim",
    "BoundReport",
    "DomainError",
    "DoublingCertificate",
    "DoublingResult",
    "EdgeColoring",
    "Graph",
    "GraphClass",
    "InternalInvariantError",
    "InvalidColoringError",
    "ParseError",
    "SearchLimits",
    "SolveOutcome",
    "SolveStatus",
    "SpectrumReport",
    "SurveyRecord",
    "ValidationReport",
    "applicable_bounds",
    "audit",
    "best_upper_bound",
    "brute_force_W",
    "certificate_to_json",
    "classify",
    "coloring_from_json",
    "coloring_to_json",
    "compute_W",
    "double_graph",
    "double_with_certificate",
    "finalize_recolor",
    "find_interval_coloring",
    "generate_connected_catalog",
    "incident_colors",
    "is_connected",
    "lift_coloring",
    "minimum_adjacency_encoding",
    "parse_edge_list",
    "parse_graph6",
    "run_survey",
    "spectrum",
    "spectrum_report",
    "survey_graph",
    "validate_interval",
    "write_graph6",
    "write_survey_csv",
]
