"""
How thresholds shape traffic
============================

A hard threshold above every possible reading silences the network.
Lowering it and zeroing the soft threshold makes every node talk every
round.  In between, traffic depends on how often readings cross the bar.
"""

from mbehzad.network import SimConfig
from mbehzad.simkit import run_simulation

for ht in (250.0, 150.0, 100.0, 50.0, -1.0):
    cfg = SimConfig(hard_threshold=ht, soft_threshold=0.0 if ht < 0 else 2.0)
    res = run_simulation(cfg, "mbehzad", max_rounds=200)
    print(f"HT={ht:6.1f}: {res.summary.total_sent:6d} packets, {res.summary.total_energy:.4f} J in 200 rounds")
