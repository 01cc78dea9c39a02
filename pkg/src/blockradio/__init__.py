"""Radio labelings of block graphs: lower bounds, certificates, families and line graphs of trees."""

from .centers import Analysis, analyze
from .certificates import CertificateReport, certify
from .errors import RadioError
from .families import FamilySpec, NamedGraph, canonical_ordering, closed_form_rn, generate, parse_spec, random_block_graph
from .graph import Graph, parse_graph, read_graph
from .linegraph import line_graph_of_tree, transfer_to_line, transfer_to_tree
from .radio import RadioLabeling, VertexOrdering, exact_radio_number, lower_bound

__all__ = [
    "Analysis",
    "CertificateReport",
    "FamilySpec",
    "Graph",
    "NamedGraph",
    "RadioError",
    "RadioLabeling",
    "VertexOrdering",
    "analyze",
    "canonical_ordering",
    "certify",
    "closed_form_rn",
    "exact_radio_number",
    "generate",
    "line_graph_of_tree",
    "lower_bound",
    "parse_graph",
    "parse_spec",
    "random_block_graph",
    "read_graph",
    "transfer_to_line",
    "transfer_to_tree",
]

__version__ = "0.1.0"
