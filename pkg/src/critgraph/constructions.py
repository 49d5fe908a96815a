"""Composition operators for 4-critical planar graphs and the seed catalog.

Every operator takes its operands as disjoint copies (relabelled by offset),
applies the edge deletions, identifications and additions of the
construction, and returns a :class:`ComposedGraph` that records where each
operand vertex ended up.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import (
    CrossEdgeExists,
    EdgeExists,
    EvenOperandCount,
    IdentificationCollision,
    InvalidFacePath,
    SelfLoopWouldForm,
    ArityError,
)
from .graph import (
    Edge,
    SimpleGraph,
    VertexMap,
    add_edge,
    add_vertex_with_edges,
    compose_maps,
    complete_graph,
    disjoint_union,
    identify_vertices,
    map_edge,
    norm_edge,
    remove_edge,
    wheel_graph,
)
from .planarity import path_on_some_face, planarity_test

UNVERIFIED_FACE = "precondition unverified in computed embedding"


@dataclass(frozen=True)
class FacePath:
    """Ordered 2-edge path ``a-b-c`` inside one operand."""

    a: int
    b: int
    c: int

    def __iter__(self):
        return iter((self.a, self.b, self.c))

    def validate(self, g: SimpleGraph) -> None:
        a, b, c = self.a, self.b, self.c
        if len({a, b, c}) != 3:
            raise InvalidFacePath(f"path {tuple(self)} repeats a vertex")
        for v in (a, b, c):
            if not (0 <= v < g.n):
                raise InvalidFacePath(f"path {tuple(self)} names vertex {v} outside 0..{g.n - 1}")
        if not (g.has_edge(a, b) and g.has_edge(b, c)):
            raise InvalidFacePath(f"path {tuple(self)} is not a path of the operand")


@dataclass(frozen=True)
class ComposedGraph:
    graph: SimpleGraph
    operand_maps: tuple[VertexMap, ...]
    apex: Optional[int] = None
    warnings: tuple[str, ...] = ()
    # operand-local edges deleted by the construction, as (operand index, edge)
    deleted: tuple[tuple[int, Edge], ...] = ()
    # result edges that do not come from any operand
    new_edges: frozenset[Edge] = field(default_factory=frozenset)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m


def _face_warnings(operands: Sequence[tuple[SimpleGraph, FacePath]]) -> list[str]:
    out = []
    for i, (g, p) in enumerate(operands):
        res = planarity_test(g)
        if not res.planar:
            out.append(f"operand {i}: not planar; {UNVERIFIED_FACE}")
        elif not path_on_some_face(g, res.rotation, tuple(p)):
            out.append(f"operand {i}: path {tuple(p)}: {UNVERIFIED_FACE}")
    return out


class _Builder:
    """Tracks a graph under surgery together with every operand's vertex map."""

    def __init__(self, operands: Sequence[SimpleGraph]) -> None:
        self.graph, maps = disjoint_union(list(operands))
        self.maps = list(maps)
        self.new_edges: set[Edge] = set()

    def v(self, i: int, x: int) -> int:
        return self.maps[i][x]

    def delete(self, i: int, e: Edge) -> None:
        self.graph = remove_edge(self.graph, (self.v(i, e[0]), self.v(i, e[1])))

    def identify(self, a: int, b: int) -> None:
        if a == b:
            return
        try:
            self.graph, vmap = identify_vertices(self.graph, a, b)
        except SelfLoopWouldForm as exc:
            raise IdentificationCollision(str(exc)) from exc
        self.maps = [compose_maps(m, vmap) for m in self.maps]
        self.new_edges = {map_edge(vmap, e) for e in self.new_edges}

    def add_apex(self, nbrs: Sequence[int]) -> int:
        self.graph, z = add_vertex_with_edges(self.graph, list(nbrs))
        self.new_edges.update(norm_edge(z, x) for x in nbrs)
        return z

    def join(self, u: int, v: int) -> None:
        try:
            self.graph = add_edge(self.graph, (u, v))
        except EdgeExists as exc:
            raise CrossEdgeExists(str(exc)) from exc
        self.new_edges.add(norm_edge(u, v))

    def result(self, apex=None, warnings=(), deleted=()) -> ComposedGraph:
        return ComposedGraph(
            self.graph,
            tuple(self.maps),
            apex,
            tuple(warnings),
            tuple((i, norm_edge(*e)) for i, e in deleted),
            frozenset(self.new_edges),
        )


def hajos_join(
    g1: SimpleGraph, e1: Sequence[int], g2: SimpleGraph, e2: Sequence[int]
) -> ComposedGraph:
    """Hajós join. ``e1 = (x1, y1)``, ``e2 = (x2, y2)``: both edges are
    removed, ``x1`` is identified with ``x2`` and ``y1y2`` becomes an edge."""
    x1, y1 = e1
    x2, y2 = e2
    b = _Builder([g1, g2])
    b.delete(0, (x1, y1))
    b.delete(1, (x2, y2))
    b.identify(b.v(0, x1), b.v(1, x2))
    b.join(b.v(0, y1), b.v(1, y2))
    return b.result(deleted=[(0, (x1, y1)), (1, (x2, y2))])


def ring_compose(
    operands: Sequence[tuple[SimpleGraph, FacePath]], *, unsafe_even: bool = False
) -> ComposedGraph:
    """Odd ring composition with an apex.

    For operand ``i`` with path ``(a_i, b_i, c_i)``: delete ``b_i c_i``,
    identify ``c_i`` with ``a_{i+1}`` cyclically, then add an apex adjacent
    to every ``b_i``.
    """
    m = len(operands)
    if m % 2 == 0:
        if not unsafe_even:
            raise EvenOperandCount(m)
        if m < 2:
            raise ArityError("ring composition needs at least two operands")
    elif m < 3:
        raise ArityError(f"ring composition needs at least three operands, got {m}")
    paths = [FacePath(*p) for _, p in operands]
    for (g, _), p in zip(operands, paths):
        p.validate(g)
    warnings = _face_warnings([(g, p) for (g, _), p in zip(operands, paths)])

    b = _Builder([g for g, _ in operands])
    for i, p in enumerate(paths):
        b.delete(i, (p.b, p.c))
    for i, p in enumerate(paths):
        j = (i + 1) % m
        b.identify(b.v(i, p.c), b.v(j, paths[j].a))
    z = b.add_apex([b.v(i, p.b) for i, p in enumerate(paths)])
    return b.result(z, warnings, [(i, (p.b, p.c)) for i, p in enumerate(paths)])


def g3_compose(g1: SimpleGraph, p1: Sequence[int], g2: SimpleGraph, p2: Sequence[int]) -> ComposedGraph:
    """Two-operand composition: delete ``b1c1`` and ``b2c2``, identify
    ``a1`` with ``a2``, add an apex on ``{a, b1, b2}`` and the edge ``c1c2``."""
    p1, p2 = FacePath(*p1), FacePath(*p2)
    p1.validate(g1)
    p2.validate(g2)
    warnings = _face_warnings([(g1, p1), (g2, p2)])
    b = _Builder([g1, g2])
    b.delete(0, (p1.b, p1.c))
    b.delete(1, (p2.b, p2.c))
    b.identify(b.v(0, p1.a), b.v(1, p2.a))
    z = b.add_apex([b.v(0, p1.a), b.v(0, p1.b), b.v(1, p2.b)])
    b.join(b.v(0, p1.c), b.v(1, p2.c))
    return b.result(z, warnings, [(0, (p1.b, p1.c)), (1, (p2.b, p2.c))])


def g4_compose(g1: SimpleGraph, p1: Sequence[int], g2: SimpleGraph, p2: Sequence[int]) -> ComposedGraph:
    """Two-operand composition without identification or apex: delete
    ``a1b1`` and ``a2b2`` (the *first* path edge), then add ``a1a2``,
    ``b1c2``, ``c1b2`` and ``c1c2``."""
    p1, p2 = FacePath(*p1), FacePath(*p2)
    p1.validate(g1)
    p2.validate(g2)
    warnings = _face_warnings([(g1, p1), (g2, p2)])
    b = _Builder([g1, g2])
    b.delete(0, (p1.a, p1.b))
    b.delete(1, (p2.a, p2.b))
    u = [b.v(0, x) for x in p1]
    v = [b.v(1, x) for x in p2]
    for s, t in ((0, 0), (1, 2), (2, 1), (2, 2)):
        b.join(u[s], v[t])
    return b.result(None, warnings, [(0, (p1.a, p1.b)), (1, (p2.a, p2.b))])


# -- catalog ---------------------------------------------------------------

def catalog_k4() -> SimpleGraph:
    return complete_graph(4)


def catalog_w5() -> SimpleGraph:
    """5-cycle on ``0..4`` with hub ``5``."""
    return wheel_graph(5)


def k4_ring_family(k: int) -> ComposedGraph:
    """Ring composition of ``2k + 1`` copies of K4, each gripped at (0, 1, 2)."""
    if k < 1:
        raise ArityError(f"family index must be >= 1, got {k}")
    k4 = catalog_k4()
    return ring_compose([(k4, FacePath(0, 1, 2))] * (2 * k + 1))


def catalog_g3_k4_k4() -> SimpleGraph:
    return g3_compose(catalog_k4(), (0, 1, 2), catalog_k4(), (0, 1, 2)).graph


def catalog_g4_k4_w5() -> SimpleGraph:
    return g4_compose(catalog_k4(), (0, 1, 2), catalog_w5(), (0, 1, 2)).graph


def surviving_edges(operands: Sequence[SimpleGraph], cg: ComposedGraph) -> set[Edge]:
    """Operand edges carried into the result through the operand maps."""
    deleted = set(cg.deleted)
    out = set()
    for i, g in enumerate(operands):
        for e in g.edges:
            if (i, e) not in deleted:
                out.add(map_edge(cg.operand_maps[i], e))
    return out
