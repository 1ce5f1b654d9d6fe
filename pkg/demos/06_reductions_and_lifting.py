"""Girth and cut reductions, and lifting 2-factors back to the original.

A snark is reduced until its girth is at least 5 and every 2-cut and
non-trivial 3-cut separates two uncolorable sides; any 2-factor of the
reduced graph lifts back without triangles and without gaining 5-circuits.
"""

from pentafactor import (
    CubicGraph,
    complement_two_factor,
    enumerate_perfect_matchings,
    full_reduce,
    lift_two_factor,
)
from pentafactor.graphs import PETERSEN_EDGES

# Petersen with one edge subdivided twice and the middle edge doubled:
# a 12-vertex snark with a 2-cycle.
edges = dict(enumerate(PETERSEN_EDGES))
del edges[0]
edges.update({100: (0, 10), 101: (10, 11), 102: (11, 1), 103: (10, 11)})
snark12 = CubicGraph(edges)

trace = full_reduce(snark12)
print("n =", snark12.n, "->", trace.reduced.n,
      "| steps:", [s.kind for s in trace.steps],
      "| terminal:", trace.terminal_flag)

print("\nlifting every 2-factor of the reduced Petersen graph:")
for m in enumerate_perfect_matchings(trace.reduced):
    reduced_factor = complement_two_factor(trace.reduced, m)
    lifted = lift_two_factor(trace, reduced_factor)
    print("  reduced lengths", reduced_factor.length_counts(),
          "-> lifted", lifted.length_counts(),
          "| triangles:", lifted.count3,
          "| 5-count change:", reduced_factor.count5, "->", lifted.count5)
