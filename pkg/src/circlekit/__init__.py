"""Linear-time circle graph recognition with split PC-trees."""

from .chord_diagram import ChordDiagram, canonical_form, circle_join, intersection_graph, is_consecutive
from .graph import Graph, InputError, parse_edge_list, serialize_edge_list
from .lexbfs import lexbfs
from .recognizer import Verdict, recognize

__version__ = "0.1.0"

__all__ = [
    "ChordDiagram",
    "Graph",
    "InputError",
    "Verdict",
    "canonical_form",
    "circle_join",
    "intersection_graph",
    "is_consecutive",
    "lexbfs",
    "parse_edge_list",
    "recognize",
    "serialize_edge_list",
]
