"""Serialization: graph6, edge lists, DOT, reports and construction recipes."""

from .dot import export_dot
from .edgelist import decode_edgelist, encode_edgelist
from .graph6 import decode_graph6, encode_graph6
from .recipe import evaluate_recipe, format_recipe, parse_recipe
from .report import parse_report, serialize_report

__all__ = [
    "decode_edgelist",
    "decode_graph6",
    "encode_edgelist",
    "encode_graph6",
    "evaluate_recipe",
    "export_dot",
    "format_recipe",
    "parse_recipe",
    "parse_report",
    "serialize_report",
]
