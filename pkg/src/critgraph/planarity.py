"""Planarity testing (left-right criterion) with a combinatorial embedding,
face tracing, the Euler-formula certificate, and the face-path check that
the construction operators use as their precondition.

A rotation system lists, for every vertex, its neighbours in counterclockwise
cyclic order. Faces are traced with one fixed rule throughout the package:
after arriving at ``v`` from ``u``, leave ``v`` towards the counterclockwise
successor of ``u`` in the rotation at ``v``.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import Disconnected, InconsistentRotation, PathEdgesMissing
from .graph import SimpleGraph

Rotation = tuple[tuple[int, ...], ...]
Dart = tuple[int, int]
FaceWalk = tuple[Dart, ...]


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    rotation: Optional[Rotation] = None

    def __bool__(self) -> bool:
        return self.planar


# -- face tracing --------------------------------------------------------

def _successor_tables(g: SimpleGraph, rot: Rotation) -> list[dict[int, int]]:
    if len(rot) != g.n:
        raise InconsistentRotation(f"rotation covers {len(rot)} vertices, graph has {g.n}")
    succ: list[dict[int, int]] = []
    for v, order in enumerate(rot):
        if sorted(order) != list(g.adjacency[v]):
            raise InconsistentRotation(f"rotation at {v} is {order}, neighbours are {g.adjacency[v]}")
        k = len(order)
        succ.append({order[i]: order[(i + 1) % k] for i in range(k)})
    return succ


def enumerate_faces(g: SimpleGraph, rot: Rotation) -> list[FaceWalk]:
    """Trace every face of the embedding; each dart lands in exactly one walk.

    Walks are emitted in order of their smallest unvisited starting dart, so
    the result is deterministic.
    """
    succ = _successor_tables(g, rot)
    darts = sorted([(u, v) for u, v in g.edges] + [(v, u) for u, v in g.edges])
    seen: set[Dart] = set()
    faces: list[FaceWalk] = []
    for start in darts:
        if start in seen:
            continue
        walk = []
        d = start
        while d not in seen:
            seen.add(d)
            walk.append(d)
            u, v = d
            d = (v, succ[v][u])
        if d != start:
            raise InconsistentRotation(f"face walk from {start} did not close")
        faces.append(tuple(walk))
    return faces


def euler_check(g: SimpleGraph, rot: Rotation) -> bool:
    """``V - E + F == 2`` for a connected graph under ``rot``."""
    if not g.is_connected():
        raise Disconnected("euler_check requires a connected graph")
    if g.n == 1:
        return True
    return g.n - g.m + len(enumerate_faces(g, rot)) == 2


def path_on_some_face(g: SimpleGraph, rot: Rotation, path: Sequence[int]) -> bool:
    a, b, c = path
    if not (g.has_edge(a, b) and g.has_edge(b, c)):
        raise PathEdgesMissing(f"path {tuple(path)} uses an edge not in the graph")
    forward = ((a, b), (b, c))
    backward = ((c, b), (b, a))
    for walk in enumerate_faces(g, rot):
        k = len(walk)
        for i in range(k):
            pair = (walk[i], walk[(i + 1) % k])
            if pair == forward or pair == backward:
                return True
    return False


def all_face_paths(g: SimpleGraph, rot: Rotation) -> list[tuple[int, int, int]]:
    """Every ordered 2-edge path ``(a, b, c)`` lying on a face walk, sorted."""
    out: set[tuple[int, int, int]] = set()
    for walk in enumerate_faces(g, rot):
        k = len(walk)
        for i in range(k):
            (a, b), (_, c) = walk[i], walk[(i + 1) % k]
            if a != c:
                out.add((a, b, c))
                out.add((c, b, a))
    return sorted(out)


# -- left-right planarity test -------------------------------------------

class _Interval:
    __slots__ = ("low", "high")

    def __init__(self, low: Optional[Dart] = None, high: Optional[Dart] = None) -> None:
        self.low = low
        self.high = high

    def empty(self) -> bool:
        return self.low is None and self.high is None

    def copy(self) -> _Interval:
        return _Interval(self.low, self.high)

    def conflicting(self, b: Dart, lowpt: dict[Dart, int]) -> bool:
        return not self.empty() and lowpt[self.high] > lowpt[b]


class _ConflictPair:
    __slots__ = ("left", "right")

    def __init__(self, left: Optional[_Interval] = None, right: Optional[_Interval] = None) -> None:
        self.left = left if left is not None else _Interval()
        self.right = right if right is not None else _Interval()

    def swap(self) -> None:
        self.left, self.right = self.right, self.left

    def lowest(self, lowpt: dict[Dart, int]) -> int:
        if self.left.empty():
            return lowpt[self.right.low]
        if self.right.empty():
            return lowpt[self.left.low]
        return min(lowpt[self.left.low], lowpt[self.right.low])


class _HalfEdges:
    """Doubly linked cyclic neighbour lists (cw/ccw pointers per vertex)."""

    def __init__(self, n: int) -> None:
        self.cw: list[dict[int, int]] = [{} for _ in range(n)]
        self.ccw: list[dict[int, int]] = [{} for _ in range(n)]
        self.first: list[Optional[int]] = [None] * n

    def add_cw(self, v: int, w: int, ref: Optional[int]) -> None:
        """Insert ``w`` immediately clockwise of ``ref`` around ``v``."""
        if ref is None:
            self.cw[v][w] = self.ccw[v][w] = w
            self.first[v] = w
            return
        nxt = self.cw[v][ref]
        self.cw[v][ref] = w
        self.cw[v][w] = nxt
        self.ccw[v][nxt] = w
        self.ccw[v][w] = ref

    def add_ccw(self, v: int, w: int, ref: Optional[int]) -> None:
        if ref is None:
            self.add_cw(v, w, None)
            return
        self.add_cw(v, w, self.ccw[v][ref])
        if self.first[v] == ref:
            self.first[v] = w

    def add_first(self, v: int, w: int) -> None:
        self.add_ccw(v, w, self.first[v])
        self.first[v] = w

    def rotation(self) -> Rotation:
        out = []
        for v, start in enumerate(self.first):
            order: list[int] = []
            if start is not None:
                w = start
                while True:
                    order.append(w)
                    w = self.ccw[v][w]
                    if w == start:
                        break
            out.append(tuple(order))
        return tuple(out)


class _LRPlanarity:
    def __init__(self, g: SimpleGraph) -> None:
        self.g = g
        n = g.n
        self.height: list[Optional[int]] = [None] * n
        self.parent_edge: list[Optional[Dart]] = [None] * n
        self.roots: list[int] = []
        self.out: list[list[int]] = [[] for _ in range(n)]
        self.oriented: set[Dart] = set()
        self.lowpt: dict[Dart, int] = {}
        self.lowpt2: dict[Dart, int] = {}
        self.nesting_depth: dict[Dart, int] = {}
        self.ordered: list[list[int]] = [[] for _ in range(n)]
        self.ref: dict[Dart, Optional[Dart]] = {}
        self.side: dict[Dart, int] = {}
        self.S: list[_ConflictPair] = []
        self.stack_bottom: dict[Dart, Optional[_ConflictPair]] = {}
        self.lowpt_edge: dict[Dart, Dart] = {}
        self.left_ref: list[Optional[int]] = [None] * n
        self.right_ref: list[Optional[int]] = [None] * n
        self.emb = _HalfEdges(n)

    def run(self) -> Optional[Rotation]:
        g = self.g
        if g.n > 2 and g.m > 3 * g.n - 6:
            return None
        for v in range(g.n):
            if self.height[v] is None:
                self.height[v] = 0
                self.roots.append(v)
                self._orient(v)
        for v in range(g.n):
            self.ordered[v] = sorted(self.out[v], key=lambda w, v=v: self.nesting_depth[(v, w)])
        for v in self.roots:
            if not self._test(v):
                return None
        for e in self.oriented:
            self.nesting_depth[e] = self._sign(e) * self.nesting_depth[e]
        for v in range(g.n):
            self.ordered[v] = sorted(self.out[v], key=lambda w, v=v: self.nesting_depth[(v, w)])
            prev = None
            for w in self.ordered[v]:
                self.emb.add_cw(v, w, prev)
                prev = w
        for v in self.roots:
            self._embed(v)
        return self.emb.rotation()

    def _orient(self, v: int) -> None:
        e = self.parent_edge[v]
        for w in self.g.adjacency[v]:
            if (v, w) in self.oriented or (w, v) in self.oriented:
                continue
            vw = (v, w)
            self.oriented.add(vw)
            self.out[v].append(w)
            self.lowpt[vw] = self.height[v]
            self.lowpt2[vw] = self.height[v]
            if self.height[w] is None:
                self.parent_edge[w] = vw
                self.height[w] = self.height[v] + 1
                self._orient(w)
            else:
                self.lowpt[vw] = self.height[w]
            self.nesting_depth[vw] = 2 * self.lowpt[vw]
            if self.lowpt2[vw] < self.height[v]:
                self.nesting_depth[vw] += 1
            if e is not None:
                if self.lowpt[vw] < self.lowpt[e]:
                    self.lowpt2[e] = min(self.lowpt[e], self.lowpt2[vw])
                    self.lowpt[e] = self.lowpt[vw]
                elif self.lowpt[vw] > self.lowpt[e]:
                    self.lowpt2[e] = min(self.lowpt2[e], self.lowpt[vw])
                else:
                    self.lowpt2[e] = min(self.lowpt2[e], self.lowpt2[vw])

    def _top(self) -> Optional[_ConflictPair]:
        return self.S[-1] if self.S else None

    def _test(self, v: int) -> bool:
        e = self.parent_edge[v]
        for w in self.ordered[v]:
            ei = (v, w)
            self.stack_bottom[ei] = self._top()
            if ei == self.parent_edge[w]:
                if not self._test(w):
                    return False
            else:
                self.lowpt_edge[ei] = ei
                self.S.append(_ConflictPair(right=_Interval(ei, ei)))
            if self.lowpt[ei] < self.height[v]:
                if w == self.ordered[v][0]:
                    self.lowpt_edge[e] = self.lowpt_edge[ei]
                elif not self._add_constraints(ei, e):
                    return False
        if e is not None:
            self._remove_back_edges(e)
        return True

    def _add_constraints(self, ei: Dart, e: Dart) -> bool:
        lowpt = self.lowpt
        P = _ConflictPair()
        while True:
            Q = self.S.pop()
            if not Q.left.empty():
                Q.swap()
            if not Q.left.empty():
                return False
            if lowpt[Q.right.low] > lowpt[e]:
                if P.right.empty():
                    P.right = Q.right.copy()
                else:
                    self.ref[P.right.low] = Q.right.high
                P.right.low = Q.right.low
            else:
                self.ref[Q.right.low] = self.lowpt_edge[e]
            if self._top() is self.stack_bottom[ei]:
                break
        while self.S and (self._top().left.conflicting(ei, lowpt) or self._top().right.conflicting(ei, lowpt)):
            Q = self.S.pop()
            if Q.right.conflicting(ei, lowpt):
                Q.swap()
            if Q.right.conflicting(ei, lowpt):
                return False
            self.ref[P.right.low] = Q.right.high
            if Q.right.low is not None:
                P.right.low = Q.right.low
            if P.left.empty():
                P.left = Q.left.copy()
            else:
                self.ref[P.left.low] = Q.left.high
            P.left.low = Q.left.low
        if not (P.left.empty() and P.right.empty()):
            self.S.append(P)
        return True

    def _remove_back_edges(self, e: Dart) -> None:
        u = e[0]
        lowpt, ref, side = self.lowpt, self.ref, self.side
        while self.S and self._top().lowest(lowpt) == self.height[u]:
            P = self.S.pop()
            if P.left.low is not None:
                side[P.left.low] = -1
        if self.S:
            P = self.S.pop()
            while P.left.high is not None and P.left.high[1] == u:
                P.left.high = ref.get(P.left.high)
            if P.left.high is None and P.left.low is not None:
                ref[P.left.low] = P.right.low
                side[P.left.low] = -1
                P.left.low = None
            while P.right.high is not None and P.right.high[1] == u:
                P.right.high = ref.get(P.right.high)
            if P.right.high is None and P.right.low is not None:
                ref[P.right.low] = P.left.low
                side[P.right.low] = -1
                P.right.low = None
            self.S.append(P)
        if lowpt[e] < self.height[u] and self.S:
            hl = self._top().left.high
            hr = self._top().right.high
            if hl is not None and (hr is None or lowpt[hl] > lowpt[hr]):
                ref[e] = hl
            else:
                ref[e] = hr

    def _sign(self, e: Dart) -> int:
        # iterative resolution of the ref chain
        chain = []
        while self.ref.get(e) is not None:
            chain.append(e)
            e = self.ref[e]
        s = self.side.get(e, 1)
        for d in reversed(chain):
            s = self.side.get(d, 1) * s
            self.side[d] = s
            self.ref[d] = None
        return s

    def _embed(self, v: int) -> None:
        for w in self.ordered[v]:
            ei = (v, w)
            if ei == self.parent_edge[w]:
                self.emb.add_first(w, v)
                self.left_ref[v] = w
                self.right_ref[v] = w
                self._embed(w)
            elif self.side.get(ei, 1) == 1:
                self.emb.add_cw(w, v, self.right_ref[w])
            else:
                self.emb.add_ccw(w, v, self.left_ref[w])
                self.left_ref[w] = v


def planarity_test(g: SimpleGraph) -> PlanarityResult:
    """Decide planarity; on success also return a planar rotation system."""
    limit = sys.getrecursionlimit()
    needed = 4 * g.n + 200
    if needed > limit:
        sys.setrecursionlimit(needed)
    try:
        rot = _LRPlanarity(g).run()
    finally:
        if needed > limit:
            sys.setrecursionlimit(limit)
    if rot is None:
        return PlanarityResult(False)
    return PlanarityResult(True, rot)
