"""
Partitioning the field into coronas and quadrants
=================================================

Every sensor position maps to one of nine regions: a central disc and
two rings cut into four quadrants each.
"""

import numpy as np
from matplotlib.figure import Figure

from mbehzad.zoning import Point, RegionId, assign_region, build_zoning, region_area, region_midpoint

z = build_zoning(100.0, eta=3)
print(f"ring width beta = {z.beta:.3f} m, outer radius = {z.radius:.3f} m")

# areas grow with the ring index, so outer regions cover more ground
for r in RegionId:
    mid = region_midpoint(z, r)
    print(f"{r.name}: area {region_area(z, r):8.1f} m^2, midpoint ({mid.x:6.2f}, {mid.y:6.2f})")

# scatter random in-field points coloured by region
rng = np.random.default_rng(1)
xy = rng.uniform(0, 100, size=(4000, 2))
xy = xy[np.hypot(xy[:, 0] - 50, xy[:, 1] - 50) <= z.radius]
labels = [int(assign_region(z, Point(*p))) for p in xy]

fig = Figure(figsize=(5, 5))
ax = fig.subplots()
ax.scatter(xy[:, 0], xy[:, 1], c=labels, s=3, cmap="tab10")
ax.set_aspect("equal")
ax.set_title("Region assignment")
fig.savefig("zoning.png")
