"""Exhaustive small-census verification and the batch workbench.

Generates every connected simple cubic graph up to 10 vertices, checks both
bounds on the bridgeless ones, and prints the oracle comparison.
"""

from pentafactor import batch_run, oracle_exact, simple_cubic_census
from pentafactor.workbench import parse_generator_spec

graphs = []
for n in (4, 6, 8, 10):
    level = simple_cubic_census(n)
    print(f"connected simple cubic graphs on {n} vertices: {len(level)}")
    graphs.extend(level)

report = batch_run(list(enumerate(graphs)), modes=("five", "odd", "oracle"))
print("\nbatch over", report.summary["graphs"], "graphs:",
      report.summary["skipped"], "skipped,",
      report.summary["violations"], "violations")

interesting = [r for r in report.rows if r.status == "ok" and not r.colorable]
for row in interesting:
    print("snark row:", f"n={row.n}", f"five={row.achieved5}/{row.bound5}",
          f"odd={row.k_odd}", f"oracle={row.oracle_w5, row.oracle_w}",
          f"flags={row.flags}")

print("\ntight family via generator spec:")
for row in batch_run(list(enumerate(parse_generator_spec("chain:1..2"))), modes=("five",)).rows:
    print(f"  n={row.n}: five-circuits {row.achieved5} / bound {row.bound5}")
