"""Snark testing: exact 3-edge-colorability and even 2-factors.

A cubic graph is 3-edge-colorable exactly when it has a 2-factor with even
circuits only, which the colorable branch of the solvers exploits.
"""

from pentafactor import (
    CubicGraph,
    UNCOLORABLE,
    even_two_factor_from_coloring,
    gen_chain_family,
    gen_petersen,
    three_edge_color,
)

k4 = CubicGraph([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
coloring = three_edge_color(k4)
print("K4 coloring classes:")
for c in (0, 1, 2):
    print("  color", c, "->", sorted(coloring.color_class(c)))
factor = even_two_factor_from_coloring(k4, coloring)
print("even 2-factor circuit lengths:", factor.length_counts())

print("\nPetersen:", three_edge_color(gen_petersen()))
print("chain family k=1:", three_edge_color(gen_chain_family(1)))
print("(both are snarks: UNCOLORABLE is the verdict, not an error)")
