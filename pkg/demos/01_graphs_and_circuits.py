"""Graph core tour: build cubic graphs, measure girth, enumerate circuits.

Run from the repository root:  python3 demos/01_graphs_and_circuits.py
"""

from pentafactor import (
    CubicGraph,
    enumerate_circuits_up_to,
    gen_petersen,
    girth,
    parse_graph,
    serialize_graph,
)

petersen = gen_petersen()
print("Petersen graph:", petersen.n, "vertices,", petersen.m, "edges")
print("girth:", girth(petersen))

fives = enumerate_circuits_up_to(petersen, 5)
print("circuits of length <= 5:", len(fives), "(all pentagons)")
for c in fives[:3]:
    print("  example circuit:", c.vertices)
print("each vertex lies on", sum(1 for c in fives if 0 in c.vertex_set), "pentagons")

# graph6 serialization for simple graphs, cubicmg for multigraphs.
text = serialize_graph(petersen)
print("graph6:", text)
print("round-trip n:", parse_graph(text).n)

theta = CubicGraph([(0, 1)] * 3)
print("theta multigraph girth:", girth(theta))
print("theta serialization:")
print(serialize_graph(theta))
