"""Immutable simple graphs on dense integer vertex ids and the surgeries
(edge deletion/insertion, vertex identification, disjoint union, vertex
addition) that every construction is assembled from."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    DuplicateNeighbor,
    EdgeAbsent,
    EdgeExists,
    EmptyOperandList,
    GraphError,
    SameVertex,
    SelfLoop,
    SelfLoopWouldForm,
    UnknownVertex,
)

Edge = tuple[int, int]
# VertexMap[i] is the image of operand vertex i in the result graph.
VertexMap = tuple[int, ...]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on vertices ``0..n-1``.

    Edges are stored as normalized ``(u, v)`` pairs with ``u < v``; two graphs
    compare equal iff they have the same vertex count and edge set.
    """

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        normalized = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise SelfLoop(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise UnknownVertex(f"edge {e} outside 0..{self.n - 1}")
            normalized.add(norm_edge(u, v))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> SimpleGraph:
        edges = [tuple(e) for e in edges]
        seen = set()
        for u, v in edges:
            key = norm_edge(u, v)
            if key in seen:
                raise EdgeExists(f"parallel edge {key}")
            seen.add(key)
        return cls(n, frozenset(seen))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhoods as integer bitsets, used by the exact solvers."""
        out = [0] * self.n
        for u, v in self.edges:
            out[u] |= 1 << v
            out[v] |= 1 << u
        return tuple(out)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edges

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in self.adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise UnknownVertex(f"vertex {v} not in 0..{self.n - 1}")

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, m={self.m})"


def remove_edge(g: SimpleGraph, e: Sequence[int]) -> SimpleGraph:
    key = norm_edge(*e)
    if key not in g.edges:
        raise EdgeAbsent(f"edge {tuple(e)} not in graph")
    return SimpleGraph(g.n, g.edges - {key})


def add_edge(g: SimpleGraph, e: Sequence[int]) -> SimpleGraph:
    u, v = e
    if u == v:
        raise SelfLoop(f"self-loop at {u}")
    g.check_vertex(u)
    g.check_vertex(v)
    key = norm_edge(u, v)
    if key in g.edges:
        raise EdgeExists(f"edge {key} already present")
    return SimpleGraph(g.n, g.edges | {key})


def identify_vertices(g: SimpleGraph, a: int, b: int) -> tuple[SimpleGraph, VertexMap]:
    """Merge non-adjacent vertices ``a`` and ``b``.

    The merged vertex takes ``min(a, b)``; vertices above ``max(a, b)`` shift
    down by one so the result stays dense. Parallel edges that arise from
    common neighbours collapse.
    """
    g.check_vertex(a)
    g.check_vertex(b)
    if a == b:
        raise SameVertex(f"cannot identify vertex {a} with itself")
    if g.has_edge(a, b):
        raise SelfLoopWouldForm(f"vertices {a} and {b} are adjacent")
    lo, hi = min(a, b), max(a, b)
    vmap = tuple(lo if x == hi else (x - 1 if x > hi else x) for x in range(g.n))
    edges = {norm_edge(vmap[u], vmap[v]) for u, v in g.edges}
    return SimpleGraph(g.n - 1, frozenset(edges)), vmap


def disjoint_union(gs: Sequence[SimpleGraph]) -> tuple[SimpleGraph, list[VertexMap]]:
    if not gs:
        raise EmptyOperandList("disjoint_union needs at least one graph")
    offset = 0
    edges: set[Edge] = set()
    maps: list[VertexMap] = []
    for g in gs:
        maps.append(tuple(range(offset, offset + g.n)))
        edges.update((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return SimpleGraph(offset, frozenset(edges)), maps


def add_vertex_with_edges(g: SimpleGraph, nbrs: Sequence[int]) -> tuple[SimpleGraph, int]:
    if len(set(nbrs)) != len(nbrs):
        raise DuplicateNeighbor(f"repeated neighbour in {list(nbrs)}")
    for v in nbrs:
        g.check_vertex(v)
    z = g.n
    return SimpleGraph(g.n + 1, g.edges | {(v, z) for v in nbrs}), z


def compose_maps(first: VertexMap, then: VertexMap) -> VertexMap:
    return tuple(then[x] for x in first)


def map_edge(vmap: VertexMap, e: Edge) -> Edge:
    return norm_edge(vmap[e[0]], vmap[e[1]])


# -- standard families ---------------------------------------------------

def empty_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n)


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, frozenset(combinations(range(n), 2)))


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return SimpleGraph(n, frozenset(norm_edge(i, (i + 1) % n) for i in range(n)))


def wheel_graph(rim: int) -> SimpleGraph:
    """Cycle ``0..rim-1`` plus a hub with id ``rim``."""
    g, _ = add_vertex_with_edges(cycle_graph(rim), list(range(rim)))
    return g


def complete_bipartite(a: int, b: int) -> SimpleGraph:
    return SimpleGraph(a + b, frozenset((i, a + j) for i in range(a) for j in range(b)))
