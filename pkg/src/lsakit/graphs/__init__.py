"""Root graphs of one-dimensional canonical decompositions and their properties."""

from .properties import check_properties, check_simple_properties, count_r5_paths
from .root_graph import (
    GradedStructure,
    RootGraph,
    as_vertex,
    build_graph,
    dual_graph,
    graded_structure,
    graph_from_constants,
    graph_from_structure,
    graph_model,
    graph_to_dict,
    root_vertex,
    support_from_graph,
    to_dot,
    vertex_key,
    vertex_label,
)

__all__ = [
    "GradedStructure",
    "RootGraph",
    "as_vertex",
    "build_graph",
    "check_properties",
    "check_simple_properties",
    "count_r5_paths",
    "dual_graph",
    "graded_structure",
    "graph_from_constants",
    "graph_from_structure",
    "graph_model",
    "graph_to_dict",
    "root_vertex",
    "support_from_graph",
    "to_dot",
    "vertex_key",
    "vertex_label",
]
