from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from critgraph.coloring import (
    chromatic_number,
    enumerate_k_colorings,
    find_k_coloring,
    forced_equal,
    is_proper,
)
from critgraph.constructions import catalog_w5, g3_compose, k4_ring_family
from critgraph.errors import (
    BoundExceeded,
    CapExceeded,
    ImproperFixedAssignment,
    PreconditionUncolorable,
    TooLarge,
)
from critgraph.graph import (
    SimpleGraph,
    complete_graph,
    cycle_graph,
    empty_graph,
    remove_edge,
)

from test_graph import graphs

K4 = complete_graph(4)
C5 = cycle_graph(5)


def random_graph(rng: random.Random, n: int, p: float) -> SimpleGraph:
    return SimpleGraph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p))


class TestFindColoring:
    def test_k4_not_3_colorable(self):
        assert find_k_coloring(K4, 3) is None

    def test_c5_with_fixed(self):
        col = find_k_coloring(C5, 3, {0: 0})
        assert col is not None and col[0] == 0 and is_proper(C5, col)

    def test_fixed_other_colour(self):
        col = find_k_coloring(C5, 3, {2: 2, 3: 0})
        assert col[2] == 2 and col[3] == 0 and is_proper(C5, col)

    def test_ring_graph_not_3_colorable(self):
        assert find_k_coloring(k4_ring_family(1).graph, 3) is None

    def test_improper_fixed(self):
        with pytest.raises(ImproperFixedAssignment):
            find_k_coloring(C5, 3, {0: 1, 1: 1})
        with pytest.raises(ImproperFixedAssignment):
            find_k_coloring(C5, 3, {0: 3})

    def test_size_guard(self):
        big = empty_graph(129)
        with pytest.raises(TooLarge):
            find_k_coloring(big, 1)
        assert find_k_coloring(big, 1, max_n=None) == (0,) * 129

    def test_symmetry_breaking_order(self):
        # without constraints, colours appear in order of first use along the search
        col = find_k_coloring(complete_graph(5), 5)
        assert sorted(col) == [0, 1, 2, 3, 4]
        assert col[0] == 0

    def test_deterministic(self):
        g = k4_ring_family(2).graph
        h = remove_edge(g, g.sorted_edges()[7])
        assert len({find_k_coloring(h, 3) for _ in range(5)}) == 1

    def test_empty_graph(self):
        assert find_k_coloring(SimpleGraph(0), 1) == ()


class TestChromatic:
    def test_k4(self):
        assert chromatic_number(K4, 10) == 4

    def test_c5(self):
        assert chromatic_number(C5, 10) == 3

    def test_g3(self):
        assert chromatic_number(g3_compose(K4, (0, 1, 2), K4, (0, 1, 2)).graph, 10) == 4

    def test_isolated(self):
        assert chromatic_number(empty_graph(3), 2) == 1

    def test_bound(self):
        with pytest.raises(BoundExceeded):
            chromatic_number(complete_graph(5), 4)


class TestForcedEqual:
    def test_k4_every_edge(self):
        for e in K4.sorted_edges():
            assert forced_equal(K4, e, 3)

    def test_k4_diamond_oracle(self):
        # enumerate the diamond's 3-colourings: the degree-2 ends always match
        cols = enumerate_k_colorings(remove_edge(K4, (0, 1)), 3)
        assert cols and all(c[0] == c[1] for c in cols)

    def test_c4(self):
        assert not forced_equal(cycle_graph(4), (0, 3), 2)

    def test_c5(self):
        assert forced_equal(C5, (0, 4), 2)

    def test_precondition(self):
        with pytest.raises(PreconditionUncolorable):
            forced_equal(complete_graph(5), (0, 1), 3)


class TestEnumerate:
    def test_k3(self):
        assert len(enumerate_k_colorings(complete_graph(3), 3)) == 6

    def test_k2(self):
        assert enumerate_k_colorings(complete_graph(2), 2) == [(0, 1), (1, 0)]

    def test_c5_chromatic_polynomial(self):
        # P(C_n, k) = (k-1)^n + (-1)^n (k-1)
        assert len(enumerate_k_colorings(C5, 3)) == 2 ** 5 - 2 == 30

    def test_guards(self):
        with pytest.raises(TooLarge):
            enumerate_k_colorings(empty_graph(21), 1)
        assert len(enumerate_k_colorings(empty_graph(21), 1, cap=5)) == 1
        with pytest.raises(CapExceeded):
            enumerate_k_colorings(C5, 3, cap=10)

    def test_lexicographic(self):
        cols = enumerate_k_colorings(C5, 3)
        assert cols == sorted(cols)


def test_agrees_with_enumeration_on_random_graphs():
    rng = random.Random(99)
    for _ in range(200):
        n = rng.randint(1, 9)
        g = random_graph(rng, n, rng.uniform(0.2, 0.8))
        k = rng.choice((2, 3, 4))
        found = find_k_coloring(g, k)
        assert (found is None) == (not enumerate_k_colorings(g, k))
        if found is not None:
            assert is_proper(g, found) and max(found, default=0) < k


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9, min_n=1), st.data())
def test_fixed_assignment_matches_enumeration(g, data):
    k = data.draw(st.integers(1, 4))
    v = data.draw(st.integers(0, g.n - 1))
    c = data.draw(st.integers(0, k - 1))
    col = find_k_coloring(g, k, {v: c})
    expected = any(x[v] == c for x in enumerate_k_colorings(g, k))
    assert (col is not None) == expected
    if col is not None:
        assert col[v] == c and is_proper(g, col)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8, min_n=2))
def test_forced_equal_matches_enumeration(g):
    for e in g.sorted_edges():
        h = remove_edge(g, e)
        for k in (2, 3):
            cols = enumerate_k_colorings(h, k)
            if not cols:
                with pytest.raises(PreconditionUncolorable):
                    forced_equal(g, e, k)
                continue
            assert forced_equal(g, e, k) == all(c[e[0]] == c[e[1]] for c in cols)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9, min_n=1))
def test_chromatic_consistency(g):
    chi = chromatic_number(g, g.n)
    assert find_k_coloring(g, chi) is not None
    if chi > 1:
        assert find_k_coloring(g, chi - 1) is None


def test_catalog_chromatic_consistency():
    for g in (K4, catalog_w5(), k4_ring_family(1).graph, k4_ring_family(2).graph):
        chi = chromatic_number(g, 5)
        assert chi == 4
        assert find_k_coloring(g, chi) is not None and find_k_coloring(g, chi - 1) is None
