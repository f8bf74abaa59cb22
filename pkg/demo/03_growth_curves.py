"""
Growth curves over a batch of runs
==================================

How do vertex, edge, and hole counts scale with the number of tiles?
Run a batch of independent seeds, measure at a geometric schedule of
checkpoints, and watch the per-tile ratios settle.

The batch runner is deterministic: the same seeds give the same CSV
bytes whether the runs execute serially or on a process pool.
"""

import os

from pentagrow import estimate_limits, run_batch, write_csv
from pentagrow.stats import write_summary_csv

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

# ---------------------------------------------------------------
# Eight runs to 2000 tiles each (a couple of seconds).  Larger n gives
# tighter ratios; the full acceptance batch uses 20 runs to n = 10000.

records = run_batch(n_max=2000, runs=8, base_seed=1)
summary = estimate_limits(records)

print("      n    V/n      E/n      H/n")
for i, n in enumerate(summary.schedule):
    print(f"  {n:5d}  {summary.mean_V_over_n[i]:.4f}"
          f" ({summary.se_V[i]:.4f})  {summary.mean_E_over_n[i]:.4f}"
          f" ({summary.se_E[i]:.4f})  {summary.mean_H_over_n[i]:.4f}"
          f" ({summary.se_H[i]:.4f})")

# ---------------------------------------------------------------
# Tail slopes: least squares over the last half of the checkpoints,
# with a 95% half-width.  V, E, and H all grow linearly in n.

for label, (est, hw) in (("V", summary.slope_V), ("E", summary.slope_E),
                         ("H", summary.slope_H),
                         ("outer perimeter", summary.slope_perimeter)):
    print(f"slope of {label:16s} = {est:8.4f} +- {hw:.4f} per tile")

# ---------------------------------------------------------------
# Persist both CSVs; the records file round-trips losslessly.

write_csv(records, os.path.join(OUT, "records.csv"))
write_summary_csv(summary, os.path.join(OUT, "summary.csv"))
print(f"\nwrote {OUT}/records.csv and {OUT}/summary.csv")
