"""
Transmit energy versus distance
===============================

Below the crossover distance the free-space term dominates; past it the
multipath term takes over and cost climbs with the fourth power.
"""

import numpy as np
from matplotlib.figure import Figure

from mbehzad.radio import RadioParams, rx_energy, tx_energy

rp = RadioParams()
k = 4000
print(f"crossover d0 = {rp.d0:.4f} m")
print(f"receive cost for {k} bits: {rx_energy(rp, k):.2e} J")

d = np.linspace(0, 150, 301)
e = np.array([tx_energy(rp, k, x) for x in d])

fig = Figure(figsize=(6, 4))
ax = fig.subplots()
ax.plot(d, e * 1e3)
ax.axvline(rp.d0, ls="--", color="grey")
ax.set_xlabel("distance (m)")
ax.set_ylabel("transmit energy (mJ)")
fig.savefig("radio.png")
