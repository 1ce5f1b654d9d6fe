"""Objectives, tie-break, pipelines, certificates, verification."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest

from pentafactor.errors import HasBridge, UnclassifiableP3b
from pentafactor.factors import complement_two_factor, two_factor_from_edges
from pentafactor.families import gen_chain_family, gen_p3_ring, gen_petersen
from pentafactor.graphs import CubicGraph, PETERSEN_EDGES, enumerate_circuits_up_to
from pentafactor.matching import enumerate_perfect_matchings, has_two_factor
from pentafactor.patterns import Census, classify_occurrences, find_occurrences
from pentafactor.solver import (
    Certificate,
    build_weights_5cyc,
    build_weights_oddness,
    enumerate_optimal_matchings,
    free_five_circuits,
    p2_tiebreak,
    nontrivial_certificate,
    solve_5cyc,
    solve_oddness,
    verify_certificate,
)

from tests.hosts import exceptional_22_host, two_cut_fixture, two_cycle_fixture


def test_complement_factor_examples(petersen, k4, cube):
    for m in enumerate_perfect_matchings(petersen):
        f = complement_two_factor(petersen, m)
        assert f.length_counts() == {5: 2}
        assert f.invariant_I == 2
    f = complement_two_factor(k4, enumerate_perfect_matchings(k4)[0])
    assert f.length_counts() == {4: 1} and f.invariant_I == -2
    for m in enumerate_perfect_matchings(cube):
        f = complement_two_factor(cube, m)
        assert f.invariant_I == Fraction(7 * f.odd_count, 2) - Fraction(cube.n, 2)
        assert f.invariant_I == -4  # all cube 2-factors are even


def test_i_identity_everywhere(petersen, k4, k33, cube):
    for g in (petersen, k4, k33, cube, gen_chain_family(1)):
        for m in enumerate_perfect_matchings(g)[:20]:
            f = complement_two_factor(g, m)
            assert f.invariant_I == Fraction(7 * f.odd_count - g.n, 2)


def test_weights_5cyc_isolated_circuit():
    # A free 5-circuit weighs one quarter-unit on each boundary edge.
    g = gen_p3_ring(4)
    census = Census("fivecyc", (), (), ())
    c5 = free_five_circuits(g, census)
    w = build_weights_5cyc(g, (), c5)
    for c in c5:
        for e in g.boundary_edge_ids(c.vertex_set):
            assert w[e] >= 1


def test_weights_5cyc_chain():
    g = gen_chain_family(1)
    p1 = find_occurrences(g, "P1")
    p3 = find_occurrences(g, "P3")
    census = classify_occurrences(g, p1, (), p3, mode="fivecyc", enforce_disjoint=True)
    from dataclasses import replace

    filled = tuple(replace(o, e_S=min(o.boundary)) for o in census.p1)
    c5 = free_five_circuits(g, census)
    assert c5 == []  # every 5-circuit lives inside a block
    w = build_weights_5cyc(g, filled, c5)
    values = sorted(w.values())
    assert values == [4, 4, 4]  # one e_S per block


def test_weights_oddness_formula():
    g = gen_p3_ring(4)
    from pentafactor.graphs import enumerate_circuits_up_to
    from pentafactor.patterns import select_boundary_edges

    p3 = find_occurrences(g, "P3")
    census = classify_occurrences(g, (), (), p3, mode="oddness", enforce_disjoint=True)
    circuits = enumerate_circuits_up_to(g, 9)
    matcher = lambda c: has_two_factor(g, c.vertex_set)
    filled = Census(
        "oddness", (), (),
        tuple(select_boundary_edges(g, o, circuits, matcher, census) for o in census.p3),
    )
    c5 = [c for c in circuits if c.length == 5]
    from pentafactor.patterns import goes_through

    c5 = [c for c in c5 if not any(goes_through(c, s) for s in filled.occurrences)]
    w = build_weights_oddness(g, filled, c5)
    # Each P3a occurrence puts weight 4 on both edges of its pair; shared
    # boundary edges (ring links selected from both sides) stack additively.
    assert sum(w.values()) == 4 * 2 * 4
    for occ in filled.p3:
        assert all(w[e] >= 4 for e in occ.E_S)


def test_weights_oddness_chain_p1_rule():
    # One P1 occurrence with no other patterns and no free 5-circuits puts a
    # single weight-8 entry on its chosen boundary edge.
    g = gen_chain_family(1)
    p1 = find_occurrences(g, "P1")
    census = classify_occurrences(g, p1, (), (), mode="oddness", enforce_disjoint=True)
    from pentafactor.graphs import enumerate_circuits_up_to
    from pentafactor.patterns import goes_through, select_boundary_edges

    circuits = enumerate_circuits_up_to(g, 9)
    matcher = lambda c: has_two_factor(g, c.vertex_set)
    filled = Census(
        "oddness",
        tuple(select_boundary_edges(g, o, circuits, matcher, census) for o in census.p1),
        (), (),
    )
    c5 = [c for c in circuits if c.length == 5
          and not any(goes_through(c, s) for s in filled.occurrences)]
    assert c5 == []
    w = build_weights_oddness(g, filled, c5)
    assert sorted(w.values()) == [8, 8, 8]  # one edge per block


def test_p2_tiebreak_minimizes_pairs():
    # On the 22-vertex host with two P2 occurrences, the tie-break picks a
    # minimum-weight matching whose through-pair count is minimal over the
    # whole optimal set.
    from pentafactor.patterns import goes_through, select_boundary_edges
    from pentafactor.graphs import enumerate_circuits_up_to

    g = exceptional_22_host()
    p1 = find_occurrences(g, "P1")
    p2 = find_occurrences(g, "P2")
    p3 = find_occurrences(g, "P3")
    census = classify_occurrences(g, p1, p2, p3, mode="oddness", enforce_disjoint=True)
    circuits = enumerate_circuits_up_to(g, 9)
    matcher = lambda c: has_two_factor(g, c.vertex_set)
    filled = Census(
        "oddness", (),
        tuple(select_boundary_edges(g, o, circuits, matcher, census) for o in census.p2),
        (), census.exception_22,
    )
    c5 = [c for c in circuits if c.length == 5
          and not any(goes_through(c, s) for s in filled.occurrences)]
    w = build_weights_oddness(g, filled, c5)
    m, wt, best_effort = p2_tiebreak(g, w, filled)
    assert not best_effort

    def pairs(matching):
        f = complement_two_factor(g, matching)
        return sum(1 for s in filled.p2 for c in f.circuits if goes_through(c, s))

    optima, capped = enumerate_optimal_matchings(g, w, cap=10_000)
    assert not capped
    assert pairs(m) == min(pairs(mm) for mm in optima)


def test_optimal_matching_enumeration(petersen):
    uniform = {e: 4 for e in petersen.edge_ids}
    ms, capped = enumerate_optimal_matchings(petersen, uniform, cap=100)
    assert not capped and len(ms) == 6
    skewed = dict(uniform)
    skewed[5] = 0
    ms, _ = enumerate_optimal_matchings(petersen, skewed, cap=100)
    assert all(5 in m for m in ms) and len(ms) == 2


def test_p2_tiebreak_no_p2_passthrough(petersen):
    census = Census("oddness", (), (), ())
    m, wt, best_effort = p2_tiebreak(petersen, {e: 4 for e in petersen.edge_ids}, census)
    assert wt == 20 and not best_effort


def test_solve5_colorable(k33, cube):
    for g in (k33, cube):
        f, cert = solve_5cyc(g)
        assert cert.achieved == 0 and f.count5 == 0 and f.count3 == 0
        assert "colorable" in cert.flags
        assert verify_certificate(g, f, cert).ok


def test_solve5_petersen_exceptional(petersen):
    f, cert = solve_5cyc(petersen)
    assert cert.achieved == 2 and "exceptional" in cert.flags
    assert f.length_counts() == {5: 2}


def test_solve5_chain_tightness():
    for k in (1, 2):
        g = gen_chain_family(k)
        f, cert = solve_5cyc(g)
        assert cert.achieved == 4 * k
        assert cert.bound_value == Fraction(2 * (g.n - 2), 15) == 4 * k
        assert cert.matching_weight == cert.fractional_bound == 4 * k
        assert verify_certificate(g, f, cert).ok


def test_solve5_reduced_to_petersen_meets_bound():
    g = two_cycle_fixture()  # n = 12, floor(2*10/15) = 1
    f, cert = solve_5cyc(g)
    assert "reduced-to-petersen" in cert.flags
    assert cert.achieved == 1 <= cert.bound_floor
    assert verify_certificate(g, f, cert).ok


def test_solve5_rejects_bridged():
    subdiv_k4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)]
    bridged = CubicGraph(subdiv_k4 + [(u + 5, v + 5) for u, v in subdiv_k4] + [(4, 9)])
    with pytest.raises(HasBridge):
        solve_5cyc(bridged)


def test_solve_oddness_chain():
    g = gen_chain_family(1)
    f, cert = solve_oddness(g)
    assert cert.achieved % 2 == 0
    assert cert.achieved <= math.floor(Fraction(6 * 32, 35)) == 5
    assert cert.achieved <= 4
    assert cert.invariant_I == Fraction(7 * cert.achieved - g.n, 2)
    assert verify_certificate(g, f, cert).ok


def test_solve_oddness_petersen(petersen):
    f, cert = solve_oddness(petersen)
    assert cert.achieved == 2 and "exceptional" in cert.flags


def test_solve_oddness_colorable(k33):
    f, cert = solve_oddness(k33)
    assert cert.achieved == 0 and f.odd_count == 0


def test_solve_oddness_ring4():
    g = gen_p3_ring(4)
    f, cert = solve_oddness(g)
    assert cert.census is not None
    c5, p1, p2, p3a, p3b, p3 = cert.census
    assert (p1, p2, p3a, p3b, p3) == (0, 0, 4, 0, 4)
    assert cert.achieved % 2 == 0 and cert.achieved <= cert.bound_floor
    assert verify_certificate(g, f, cert).ok


def test_solve_oddness_ring2_unclassifiable():
    with pytest.raises(UnclassifiableP3b):
        solve_oddness(gen_p3_ring(2))


def test_vertex_count_inequality_on_reduced():
    # Vertex-count inequality, exact rationals, on generic reduced graphs.
    for g, mode_counts in [
        (gen_chain_family(1), None),
        (gen_p3_ring(4), None),
    ]:
        try:
            f, cert = solve_oddness(g)
        except UnclassifiableP3b:
            continue
        c5, p1, p2, p3a, p3b, _ = cert.census
        assert Fraction(cert.reduced_n) >= (
            Fraction(5, 3) * c5 + 10 * p1 + 10 * p2 + 9 * p3a + 10 * p3b
        )


def test_verify_flags_tampering():
    g = gen_chain_family(1)
    f, cert = solve_5cyc(g)
    from dataclasses import replace

    bad = replace(cert, achieved=0)
    verdict = verify_certificate(g, f, bad)
    assert not verdict.ok
    assert any("achieved" in msg for msg in verdict.failures)


def test_certificate_json_round_trip():
    g = gen_p3_ring(4)
    f, cert = solve_oddness(g)
    back = Certificate.from_json(cert.to_json())
    assert back.achieved == cert.achieved
    assert back.bound_value == cert.bound_value
    assert back.census == cert.census
    assert back.invariant_I == cert.invariant_I
    assert verify_certificate(g, f, back).ok


def test_nontrivial_certificate(petersen):
    assert nontrivial_certificate(petersen) is None  # the exception
    assert nontrivial_certificate(gen_chain_family(1)) is None  # cec = 2
    g = gen_p3_ring(4)
    result = nontrivial_certificate(g)
    if result is not None:
        f, cert = result
        assert cert.theorem == "T4-nontrivial"
        assert cert.bound_value == Fraction(g.n, 10)
        assert cert.achieved <= cert.bound_floor


def test_exceptional_22_host_end_to_end():
    # Two P2 occurrences sharing one edge and two vertices: the one allowed
    # intersection.  The solver surfaces it as a flag and both bounds hold.
    g = exceptional_22_host()
    f, cert = solve_oddness(g)
    assert "disjointness-exception-22" in cert.flags
    assert cert.census[2] == 2  # two P2 occurrences
    assert cert.achieved == 2 <= cert.bound_floor == 3
    assert verify_certificate(g, f, cert).ok
    f5, cert5 = solve_5cyc(g)
    assert cert5.achieved <= cert5.bound_floor == 2


def test_census_snark_certificates_verify():
    # End-to-end verification over every uncolorable census graph plus a
    # deterministic sample of colorable ones.
    from pathlib import Path

    from pentafactor.coloring import UNCOLORABLE, three_edge_color
    from pentafactor.connectivity import bridges
    from pentafactor.formats import parse_graph

    path = Path(__file__).parent / "data" / "cubic_simple_connected_14.g6"
    graphs = [parse_graph(line) for line in path.read_text().splitlines() if line]
    graphs = [g for g in graphs if not bridges(g)]
    snarks = [g for g in graphs if three_edge_color(g) is UNCOLORABLE]
    sample = snarks + graphs[::97]
    assert len(snarks) == 7  # Petersen, one on 12 vertices, five on 14
    for g in sample:
        f, cert = solve_5cyc(g)
        verdict = verify_certificate(g, f, cert)
        assert verdict.ok, verdict.failures


def test_five_circuit_accounting_on_reduced():
    # count5 on the reduced graph respects 1/6 c5 + 4/3 p1' + p3.
    for g in (gen_chain_family(1), gen_p3_ring(4)):
        f, cert = solve_5cyc(g)
        c5, p1, _, _, _, p3 = cert.census
        assert cert.achieved_reduced <= (
            Fraction(1, 6) * c5 + Fraction(4, 3) * p1 + p3
        )
