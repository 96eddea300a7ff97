"""Graphs with construction-tracking labels, DIMACS I/O and the star-join constructions."""

from .constructions import (
    TowerParams,
    closed_form_neighborhoods,
    complete_graph,
    cycle_graph,
    expected_tower_order,
    graph_from_spec,
    left_labels,
    path_graph,
    project_first,
    project_second,
    random_connected_graph,
    right_labels,
    star_graph,
    star_join_direct,
    star_join_quotient,
    tower,
    tower_levels,
)
from .graph import INFINITE, Graph
from .labels import Base, Left, Mid, Named, Right, Tagged, VertexLabel, format_label, parse_label

__all__ = [
    "INFINITE",
    "Base",
    "Graph",
    "Left",
    "Mid",
    "Named",
    "Right",
    "Tagged",
    "TowerParams",
    "VertexLabel",
    "closed_form_neighborhoods",
    "complete_graph",
    "cycle_graph",
    "expected_tower_order",
    "format_label",
    "graph_from_spec",
    "left_labels",
    "parse_label",
    "path_graph",
    "project_first",
    "project_second",
    "random_connected_graph",
    "right_labels",
    "star_graph",
    "star_join_direct",
    "star_join_quotient",
    "tower",
    "tower_levels",
]
