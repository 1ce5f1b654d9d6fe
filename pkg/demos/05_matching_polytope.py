"""Minimum-weight perfect matching and the uniform point of the polytope.

The solvers optimize linear objectives over the perfect-matching polytope;
because (1/3, ..., 1/3) lies inside it, the optimum never exceeds one third
of the total weight.  Weights are integer quarter-units throughout.
"""

import random

from pentafactor import (
    enumerate_perfect_matchings,
    fractional_objective_value,
    gen_petersen,
    min_weight_perfect_matching,
)
from pentafactor.factors import complement_two_factor

petersen = gen_petersen()
matchings = enumerate_perfect_matchings(petersen)
print("Petersen has", len(matchings), "perfect matchings")
for m in matchings:
    factor = complement_two_factor(petersen, m)
    print("  matching", sorted(m), "-> 2-factor lengths", factor.length_counts())

uniform = {e: 4 for e in petersen.edge_ids}
m, wt = min_weight_perfect_matching(petersen, uniform)
print("\nuniform weights: optimum", wt, "=", len(m), "edges x 4")
print("fractional value at (1/3,...,1/3):", fractional_objective_value(petersen, uniform))

rng = random.Random(5)
w = {e: rng.randrange(0, 13) for e in petersen.edge_ids}
m, wt = min_weight_perfect_matching(petersen, w)
oracle = min(sum(w[e] for e in mm) for mm in matchings)
print("\nrandom weights: solver", wt, "| enumeration oracle", oracle, "| equal:", wt == oracle)
assert wt <= fractional_objective_value(petersen, w)
