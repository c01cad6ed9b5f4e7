import math

import numpy as np

from mbehzad.network import Node, SimConfig, initial_energy
from mbehzad.protocol import SimState
from mbehzad.zoning import Point, RegionId, assign_region, build_zoning

CENTER = (50.0, 50.0)

# gate wide open, lossless links
OPEN = dict(hard_threshold=-1.0, soft_threshold=0.0, attr_min=0.0, attr_max=1.0, p_drop=0.0)


def polar_point(r, deg):
    t = math.radians(deg)
    return Point(CENTER[0] + r * math.cos(t), CENTER[1] + r * math.sin(t))


def dist(a, b):
    return math.sqrt((a[0] - b[0]) ** 2 + (a[1] - b[1]) ** 2)


def make_state(points, cfg=None, seed=0, trace=False, energy=None):
    """State with hand-placed nodes; ids follow the order of ``points``."""
    cfg = cfg or SimConfig(**OPEN)
    z = build_zoning(cfg.field_size, cfg.eta)
    nodes = []
    for i, p in enumerate(points):
        region = assign_region(z, Point(*p))
        e = initial_energy(cfg, region) if energy is None else energy
        nodes.append(Node(i, Point(*p), region, e, e))
    ss = np.random.SeedSequence(seed).spawn(3)
    return SimState(cfg, z, nodes, *(np.random.default_rng(s) for s in ss), trace=[] if trace else None)


def midpoint_oracle(region: RegionId, beta: float):
    """Polar midpoint of a sector from first principles."""
    corona = 2 if region <= RegionId.M5 else 3
    q = (region - 2) % 4
    r_mid = (corona - 0.5) * beta
    t = math.radians(45 + 90 * q)
    return CENTER[0] + r_mid * math.cos(t), CENTER[1] + r_mid * math.sin(t)


def angle_deg(p):
    return math.degrees(math.atan2(p[1] - CENTER[1], p[0] - CENTER[0])) % 360
