"""Fast slice of the closure suite (the full run is an acceptance criterion):
every operator over K4 alone, with every face path or oriented edge."""

from __future__ import annotations

from itertools import product

import pytest

from critgraph.constructions import catalog_k4, g3_compose, g4_compose, hajos_join, ring_compose
from critgraph.criticality import verify_k_critical

from closure import arcs, automorphisms, face_paths, path_orbit_reps, pool, ring_applications

K4 = catalog_k4()


def critical_planar(g) -> bool:
    r = verify_k_critical(g, 4)
    return r.is_k_critical and r.planar


@pytest.mark.parametrize("op", [g3_compose, g4_compose], ids=["g3", "g4"])
def test_two_operand_on_k4(op):
    paths = face_paths(K4)
    assert len(paths) == 24
    assert all(critical_planar(op(K4, p, K4, q).graph) for p, q in product(paths, repeat=2))


def test_hajos_on_k4():
    assert all(critical_planar(hajos_join(K4, e, K4, f).graph) for e, f in product(arcs(K4), repeat=2))


def test_rings_on_k4_every_path():
    # K4 is arc-transitive on 2-paths, so pinning the first operand loses nothing
    paths = face_paths(K4)
    for q, r in product(paths, repeat=2):
        assert critical_planar(ring_compose([(K4, (0, 1, 2)), (K4, q), (K4, r)]).graph)


def test_pool_is_critical():
    assert all(critical_planar(g) for g in pool().values())


def test_orbit_representatives_cover_all_paths():
    for g in pool().values():
        reps = set(path_orbit_reps(g))
        auts = automorphisms(g)
        for p in face_paths(g):
            assert any(tuple(a[x] for x in p) in reps for a in auts)


def test_ring_enumeration_respects_size_bound():
    sizes = [cg.n for _, cg in ring_applications(max_result_n=16)]
    assert sizes and max(sizes) <= 16
