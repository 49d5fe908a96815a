"""Exact k-colouring by backtracking with saturation-degree ordering.

Colours are ``0..k-1``. A colouring is a tuple indexed by vertex id.
"""

from __future__ import annotations

from typing import Mapping, Optional, Sequence

from .errors import (
    BoundExceeded,
    CapExceeded,
    ColoringError,
    EdgeAbsent,
    ImproperFixedAssignment,
    PreconditionUncolorable,
    TooLarge,
    UnknownVertex,
)
from .graph import SimpleGraph, norm_edge, remove_edge

Coloring = tuple[int, ...]

DEFAULT_MAX_N = 128
ENUMERATION_MAX_N = 20


def is_proper(g: SimpleGraph, coloring: Sequence[int]) -> bool:
    return len(coloring) == g.n and all(coloring[u] != coloring[v] for u, v in g.edges)


def _check_fixed(g: SimpleGraph, k: int, fixed: Mapping[int, int]) -> None:
    for v, c in fixed.items():
        if not (0 <= v < g.n):
            raise UnknownVertex(f"fixed vertex {v} not in graph")
        if not (0 <= c < k):
            raise ImproperFixedAssignment(f"colour {c} for vertex {v} outside 0..{k - 1}")
    for u, v in g.edges:
        if u in fixed and v in fixed and fixed[u] == fixed[v]:
            raise ImproperFixedAssignment(f"adjacent vertices {u},{v} both fixed to {fixed[u]}")


def _search(masks: Sequence[int], n: int, k: int, color: list[int], break_symmetry: bool) -> bool:
    """Backtracking core; ``color`` holds -1 for unassigned vertices and is
    filled in place on success."""
    full = (1 << k) - 1
    # forbidden-colour bitmask per vertex, derived from the pre-assigned ones
    forbid = [0] * n
    uncolored = 0
    for v in range(n):
        if color[v] < 0:
            uncolored |= 1 << v
    for v in range(n):
        c = color[v]
        if c >= 0:
            m = masks[v]
            bit = 1 << c
            while m:
                low = m & -m
                u = low.bit_length() - 1
                forbid[u] |= bit
                m ^= low
    used = max(color) + 1 if n else 0
    # by_sat[s]: vertices whose forbidden mask has s bits (colored ones are
    # masked out with ``uncolored`` at pick time)
    by_sat = [0] * (k + 1)
    for v in range(n):
        by_sat[forbid[v].bit_count()] |= 1 << v

    def pick() -> int:
        # highest saturation first, lowest id among ties
        for s in range(k, -1, -1):
            m = by_sat[s] & uncolored
            if m:
                return (m & -m).bit_length() - 1
        return -1

    def rec(used: int) -> bool:
        nonlocal uncolored
        if not uncolored:
            return True
        v = pick()
        avail = full & ~forbid[v]
        if break_symmetry:
            # colours are introduced in increasing order
            avail &= (1 << min(used + 1, k)) - 1
        if not avail:
            return False
        uncolored &= ~(1 << v)
        nbrs = masks[v] & uncolored
        while avail:
            low = avail & -avail
            avail ^= low
            c = low.bit_length() - 1
            touched = []
            wiped = False
            m = nbrs
            while m:
                lb = m & -m
                u = lb.bit_length() - 1
                m ^= lb
                f = forbid[u]
                if not f & low:
                    s = f.bit_count()
                    by_sat[s] ^= lb
                    by_sat[s + 1] |= lb
                    forbid[u] = f | low
                    touched.append((u, lb, s))
                    if s + 1 == k:
                        wiped = True
            color[v] = c
            # a neighbour left with no colour is a dead end, so skip the descent
            if not wiped and rec(max(used, c + 1)):
                return True
            for u, lb, s in touched:
                forbid[u] &= ~low
                by_sat[s + 1] ^= lb
                by_sat[s] |= lb
        color[v] = -1
        uncolored |= 1 << v
        return False

    return rec(used)


def find_k_coloring(
    g: SimpleGraph,
    k: int,
    fixed: Optional[Mapping[int, int]] = None,
    *,
    max_n: Optional[int] = DEFAULT_MAX_N,
) -> Optional[Coloring]:
    """Return a proper k-colouring extending ``fixed``, or ``None``.

    With no fixed assignment, colour classes are opened in order (first
    branched vertex gets 0, the next new colour is 1, ...), which removes the
    k! relabelling symmetry. Any fixed assignment disables that pruning.
    Ties in vertex selection go to the lowest id.
    """
    if k < 1:
        raise ColoringError(f"k must be >= 1, got {k}")
    if max_n is not None and g.n > max_n:
        raise TooLarge(f"{g.n} vertices exceeds the solver guard of {max_n}")
    fixed = dict(fixed or {})
    _check_fixed(g, k, fixed)
    color = [-1] * g.n
    for v, c in fixed.items():
        color[v] = c
    if not _search(g.masks, g.n, k, color, break_symmetry=not fixed):
        return None
    result = tuple(color)
    if not is_proper(g, result) or any(result[v] != c for v, c in fixed.items()):
        raise AssertionError("solver produced an invalid colouring")
    return result


def is_k_colorable(g: SimpleGraph, k: int, **kw) -> bool:
    return find_k_coloring(g, k, **kw) is not None


def chromatic_number(g: SimpleGraph, max_k: int, **kw) -> int:
    if g.n < 1:
        raise ColoringError("chromatic number needs at least one vertex")
    if max_k < 1:
        raise ColoringError(f"max_k must be >= 1, got {max_k}")
    lower = 2 if g.m else 1
    for k in range(lower, max_k + 1):
        if find_k_coloring(g, k, **kw) is not None:
            return k
    raise BoundExceeded(f"chromatic number exceeds {max_k}")


def forced_equal(g: SimpleGraph, e: Sequence[int], k: int, **kw) -> bool:
    """True iff every proper k-colouring of ``g - e`` gives e's ends one colour.

    Searches ``g - e`` for a colouring with the endpoints pinned to distinct
    colours 0 and 1; by colour permutation that is without loss of generality.
    """
    u, v = e
    if not g.has_edge(u, v):
        raise EdgeAbsent(f"edge {tuple(e)} not in graph")
    h = remove_edge(g, e)
    if find_k_coloring(h, k, **kw) is None:
        raise PreconditionUncolorable(f"g - {norm_edge(u, v)} is not {k}-colourable")
    if k < 2:
        return True
    return find_k_coloring(h, k, {u: 0, v: 1}, **kw) is None


def enumerate_k_colorings(g: SimpleGraph, k: int, cap: Optional[int] = None) -> list[Coloring]:
    """All proper k-colourings in lexicographic order (vertex 0 most significant).

    Plain vertex-order backtracking with no pruning heuristics, so it can
    serve as an independent oracle for the main solver. Without a ``cap``,
    graphs above 20 vertices are refused; with one, finding more than ``cap``
    colourings raises :class:`CapExceeded`.
    """
    if cap is None and g.n > ENUMERATION_MAX_N:
        raise TooLarge(f"enumeration refused above {ENUMERATION_MAX_N} vertices without a cap")
    lower = [[w for w in g.adjacency[v] if w < v] for v in range(g.n)]
    out: list[Coloring] = []
    color = [0] * g.n

    def rec(v: int) -> None:
        if v == g.n:
            if cap is not None and len(out) >= cap:
                raise CapExceeded(f"more than {cap} colourings")
            out.append(tuple(color))
            return
        for c in range(k):
            if all(color[w] != c for w in lower[v]):
                color[v] = c
                rec(v + 1)

    rec(0)
    return out
