"""graph6/sparse6/cubicmg round-trips against the networkx reference codec."""

from __future__ import annotations

import networkx as nx
import pytest

from pentafactor.errors import NotCubic, ParseError
from pentafactor.families import gen_chain_family, gen_petersen
from pentafactor.formats import graph6_encode, parse_graph, serialize_graph
from pentafactor.graphs import CubicGraph, PETERSEN_EDGES, is_isomorphic


def nx_graph6(edges) -> str:
    return nx.to_graph6_bytes(nx.Graph(edges), header=False).decode().strip()


def test_k4_graph6_matches_reference(k4):
    ref = nx_graph6(k4.endpoints(e) for e in k4.edge_ids)
    assert serialize_graph(k4) == ref
    assert is_isomorphic(parse_graph(ref), k4)


def test_petersen_graph6_matches_reference(petersen):
    ref = nx_graph6(PETERSEN_EDGES)
    mine = serialize_graph(petersen)
    assert mine == ref
    # One count byte plus eight data bytes.
    assert len(mine) == 9
    assert is_isomorphic(parse_graph(mine), petersen)


def test_header_variant_accepted(petersen):
    assert is_isomorphic(parse_graph(">>graph6<<" + serialize_graph(petersen)), petersen)


def test_petersen_edge_list_form(petersen):
    # Outer cycle 0..4, spokes i-(i+5), inner edges per the fixed labeling.
    g = parse_graph(
        "cubicmg 10 15\n" + "\n".join(f"{u} {v}" for u, v in PETERSEN_EDGES)
    )
    assert g.n == 10 and g.m == 15
    assert is_isomorphic(g, petersen)


def test_non_cubic_rejected():
    with pytest.raises(NotCubic):
        parse_graph(nx_graph6([(0, 1), (1, 2)]))  # path P3


def test_theta_round_trip(theta):
    text = serialize_graph(theta)
    assert text == "cubicmg 2 3\n0 1\n0 1\n0 1"
    assert is_isomorphic(parse_graph(text), theta)


def test_multigraph_rejected_by_graph6(theta):
    with pytest.raises(ParseError):
        graph6_encode(theta)


def test_sparse6_read(petersen):
    data = nx.to_sparse6_bytes(nx.Graph(PETERSEN_EDGES), header=False).decode().strip()
    assert is_isomorphic(parse_graph(data), petersen)


def test_round_trip_families(petersen, k4, k33, cube):
    for g in (petersen, k4, k33, cube, gen_chain_family(1)):
        back = parse_graph(serialize_graph(g))
        assert back.n == g.n and back.m == g.m
        # Serialization relabels monotonically, so edge multisets agree.
        relabel = {v: i for i, v in enumerate(g.vertices)}
        mine = sorted(tuple(sorted((relabel[u], relabel[v])))
                      for u, v in (g.endpoints(e) for e in g.edge_ids))
        theirs = sorted(tuple(sorted(back.endpoints(e))) for e in back.edge_ids)
        assert mine == theirs


def test_malformed_inputs():
    for text in ("", "cubicmg x", "cubicmg 2 1\n0 1\n0 1", "~~~" + chr(30)):
        with pytest.raises(ParseError):
            parse_graph(text)
