"""Petersen-derived patterns: find, classify, and equip occurrences.

P1 = Petersen minus an edge, P2 = Petersen with an edge subdivided twice,
P3 = Petersen minus a vertex.  Subgraphs isomorphic to these are treated
separately by both solvers because they force 5-circuits locally.
"""

from pentafactor import (
    classify_occurrences,
    find_occurrences,
    gen_chain_family,
    gen_p3_ring,
    gen_petersen,
    pattern_graph,
)
from pentafactor.graphs import enumerate_circuits_up_to
from pentafactor.matching import has_two_factor
from pentafactor.patterns import select_boundary_edges

for kind in ("P1", "P2", "P3"):
    pat = pattern_graph(kind)
    print(kind, "has", pat.n, "vertices,", pat.m, "edges,",
          len(pat.degree2_vertices), "degree-2 vertices")

host = gen_chain_family(1)
print("\nchain k=1 as host:")
p1 = find_occurrences(host, "P1")
p3 = find_occurrences(host, "P3")
print("P1 occurrences:", len(p1), "| P3 occurrences:", len(p3))
census = classify_occurrences(host, p1, (), p3, mode="fivecyc", enforce_disjoint=True)
print("classified: P1' =", len(census.p1), ", P3 =", len(census.p3),
      "(every P3 extends to a P1 inside its block)")

ring = gen_p3_ring(4)
print("\nP3 ring with 4 copies as host:")
p3 = find_occurrences(ring, "P3")
census = classify_occurrences(ring, (), (), p3, mode="oddness", enforce_disjoint=True)
circuits = enumerate_circuits_up_to(ring, 9)
matcher = lambda c: has_two_factor(ring, c.vertex_set)
for occ in census.p3:
    filled = select_boundary_edges(ring, occ, circuits, matcher, census)
    print("  occurrence on", sorted(occ.host_vertices)[:3], "... ->",
          filled.class_tag, "pair", sorted(filled.E_S))
