"""Construct 4-critical planar graphs by composition and verify their
properties by exact search."""

from .coloring import chromatic_number, enumerate_k_colorings, find_k_coloring, forced_equal
from .constructions import (
    ComposedGraph,
    FacePath,
    catalog_k4,
    catalog_w5,
    g3_compose,
    g4_compose,
    hajos_join,
    k4_ring_family,
    ring_compose,
)
from .criticality import CriticalityReport, forced_equal_all_edges, verify_k_critical
from .graph import (
    SimpleGraph,
    add_edge,
    add_vertex_with_edges,
    disjoint_union,
    identify_vertices,
    remove_edge,
)
from .planarity import enumerate_faces, euler_check, path_on_some_face, planarity_test

__all__ = [
    "ComposedGraph",
    "CriticalityReport",
    "FacePath",
    "SimpleGraph",
    "add_edge",
    "add_vertex_with_edges",
    "catalog_k4",
    "catalog_w5",
    "chromatic_number",
    "disjoint_union",
    "enumerate_faces",
    "enumerate_k_colorings",
    "euler_check",
    "find_k_coloring",
    "forced_equal",
    "forced_equal_all_edges",
    "g3_compose",
    "g4_compose",
    "hajos_join",
    "identify_vertices",
    "k4_ring_family",
    "path_on_some_face",
    "planarity_test",
    "remove_edge",
    "ring_compose",
    "verify_k_critical",
]
