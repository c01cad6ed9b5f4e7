"""
Comparing protocols over several seeds
======================================

Average five seeds for each protocol and print the lifetime markers.
The same comparison is available from the shell via ``mbehzad compare``.
"""

from mbehzad.network import SimConfig
from mbehzad.simkit import aggregate_runs, emit_plots

cfg = SimConfig(runs=5)
results = {p: aggregate_runs(cfg, p) for p in ("mbehzad", "leach", "direct")}

for name, agg in results.items():
    print(f"{name:8s} mean FDT {agg.mean_fdt:8.1f}   mean ADT {agg.mean_adt:8.1f}")

emit_plots({p: a.series for p, a in results.items()}, "compare", n_nodes=cfg.n_nodes)
