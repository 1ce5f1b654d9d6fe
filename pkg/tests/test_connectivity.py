"""Cuts and cyclic edge connectivity against exhaustive oracles."""

from __future__ import annotations

import itertools

import pytest

from pentafactor.connectivity import (
    bridges,
    cyclic_edge_connectivity,
    edges_in_small_cuts,
    small_cuts,
)
from pentafactor.errors import HasBridge, NotDefined
from pentafactor.families import gen_chain_family, gen_petersen
from pentafactor.graphs import CubicGraph, MultiGraph, connected_components


def oracle_small_cuts(g, k):
    """Brute force: all minimal disconnecting edge sets of size <= k."""
    ids = list(g.edge_ids)
    cuts = []
    for size in range(1, k + 1):
        for combo in itertools.combinations(ids, size):
            removed = frozenset(combo)
            if len(connected_components(g, removed)) < 2:
                continue
            if any(frozenset(c) < removed for c in cuts):
                continue
            cuts.append(removed)
    return {c for c in cuts if len(c) >= 2}


def oracle_cyclic_connectivity(g):
    """Exhaustive over vertex subsets: both sides must contain a circuit."""
    def side_has_circuit(vs):
        sub_edges = g.induced_edge_ids(vs)
        sub = MultiGraph({e: g.endpoints(e) for e in sub_edges}, vertices=vs)
        for comp in connected_components(sub):
            if len(sub.induced_edge_ids(comp)) >= len(comp):
                return True
        return False

    verts = list(g.vertices)
    best = None
    for r in range(1, len(verts) // 2 + 1):
        for combo in itertools.combinations(verts, r):
            a = set(combo)
            b = set(verts) - a
            if not (side_has_circuit(a) and side_has_circuit(b)):
                continue
            cut = len(g.boundary_edge_ids(a))
            if best is None or cut < best:
                best = cut
    return best


# K4 with one edge subdivided: a cubic gadget with one degree-2 slot.
_SUBDIV_K4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)]


def bridged_dumbbell() -> CubicGraph:
    return CubicGraph(
        _SUBDIV_K4 + [(u + 5, v + 5) for u, v in _SUBDIV_K4] + [(4, 9)]
    )


def test_bridges(petersen, theta):
    assert bridges(petersen) == []
    assert bridges(theta) == []
    g = bridged_dumbbell()
    assert len(bridges(g)) == 1
    (b,) = bridges(g)
    assert set(g.endpoints(b)) == {4, 9}


def test_petersen_cuts_all_trivial(petersen):
    cuts = small_cuts(petersen, 3)
    assert len(cuts) == 10
    assert all(c.trivial and c.size == 3 for c in cuts)
    assert {frozenset(c.edge_ids) for c in cuts} == oracle_small_cuts(petersen, 3)


def test_small_cuts_require_bridgeless():
    with pytest.raises(HasBridge):
        small_cuts(bridged_dumbbell(), 2)


def test_theta_has_no_two_cuts(theta):
    # Removing any two of the three parallel edges leaves the third, so the
    # theta multigraph is 3-edge-connected; its only 3-cut is the dependent
    # triple, which is excluded from E3 by the independence requirement.
    assert small_cuts(theta, 2) == []
    assert oracle_small_cuts(theta, 2) == set()
    triples = small_cuts(theta, 3)
    assert len(triples) == 1 and not triples[0].independent
    e2, e3 = edges_in_small_cuts(theta)
    assert e2 == frozenset() and e3 == frozenset()


def test_chain_family_cuts():
    g = gen_chain_family(1)
    cuts2 = small_cuts(g, 2)
    # One 2-cut per chain block (its two linking edges), and nothing else.
    assert len(cuts2) == 3
    assert {frozenset(c.edge_ids) for c in cuts2} == oracle_small_cuts(g, 2)
    e2, e3 = edges_in_small_cuts(g)
    assert len(e2) == 6  # the six chain-linking edges
    link_ends = {v for e in e2 for v in g.endpoints(e)}
    assert {0, 1} <= link_ends  # both hubs sit on linking edges
    assert e2 <= e3


def test_e2_subset_e3(petersen, cube, k33):
    for g in (petersen, cube, k33, gen_chain_family(1)):
        e2, e3 = edges_in_small_cuts(g)
        assert e2 <= e3


def test_every_cut_disconnects(cube, k33):
    for g in (cube, k33, gen_chain_family(1)):
        for cut in small_cuts(g, 3):
            comps = [frozenset(c) for c in connected_components(g, frozenset(cut.edge_ids))]
            assert len(comps) == 2
            assert cut.side_small in comps


def test_no_adjacent_two_cut_edges(cube, k33, petersen):
    for g in (petersen, cube, k33, gen_chain_family(1)):
        for cut in small_cuts(g, 2):
            a, b = cut.edge_ids
            assert not set(g.endpoints(a)) & set(g.endpoints(b))


def test_cyclic_connectivity_values(petersen, cube, k33):
    assert cyclic_edge_connectivity(petersen) == 5
    assert oracle_cyclic_connectivity(petersen) == 5
    assert cyclic_edge_connectivity(cube) == oracle_cyclic_connectivity(cube) == 4
    assert cyclic_edge_connectivity(gen_chain_family(1)) == 2
    with pytest.raises(NotDefined):
        cyclic_edge_connectivity(k33)  # n = 6 < 8


def test_cyclic_connectivity_oracle_cross_check(cube):
    # Wagner graph V8 (Moebius ladder): cyclically 4-edge-connected.
    v8 = CubicGraph([(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)])
    assert cyclic_edge_connectivity(v8) == oracle_cyclic_connectivity(v8)
