"""Hemisphere-Zoning partition of a square field.

The field is centred on the base station and cut into ``eta`` concentric
coronas of width ``beta``. The innermost disc is region M1; every outer
corona is sliced along the horizontal and vertical axes into four quadrant
sectors, giving M2..M5 (middle corona) and M6..M9 (outer corona).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum
from typing import NamedTuple

from .errors import BadEta, NonPositiveField, OutOfZone

TWO_PI = 2.0 * math.pi
HALF_PI = 0.5 * math.pi

MAX_ETA = 3


class Point(NamedTuple):
    x: float
    y: float


class RegionId(IntEnum):
    M1 = 1
    M2 = 2
    M3 = 3
    M4 = 4
    M5 = 5
    M6 = 6
    M7 = 7
    M8 = 8
    M9 = 9

    @property
    def corona(self) -> int:
        if self == RegionId.M1:
            return 1
        return 2 if self <= RegionId.M5 else 3

    @property
    def quadrant(self) -> int | None:
        """Quadrant index 0..3 counter-clockwise from +x, or None for M1."""
        if self == RegionId.M1:
            return None
        return (self - 2) % 4

    @classmethod
    def from_corona(cls, corona: int, quadrant: int | None = None) -> RegionId:
        if corona == 1:
            return cls.M1
        if corona not in (2, 3) or quadrant not in (0, 1, 2, 3):
            raise ValueError(f"no region for corona={corona}, quadrant={quadrant}")
        return cls(2 + 4 * (corona - 2) + quadrant)


MIDDLE_REGIONS = (RegionId.M2, RegionId.M3, RegionId.M4, RegionId.M5)
OUTER_REGIONS = (RegionId.M6, RegionId.M7, RegionId.M8, RegionId.M9)


def paired_middle(region: RegionId) -> RegionId:
    """Middle-corona region radially aligned with an outer region (M6 -> M2, ...)."""
    if region.corona != 3:
        raise ValueError(f"{region.name} is not an outer-corona region")
    return RegionId(region - 4)


@dataclass(frozen=True)
class Zoning:
    center: Point
    field_size: float
    eta: int
    beta: float

    @property
    def radius(self) -> float:
        return self.eta * self.beta

    @property
    def regions(self) -> tuple[RegionId, ...]:
        return tuple(r for r in RegionId if r.corona <= self.eta)


def build_zoning(field_size: float, eta: int = 3) -> Zoning:
    """Partition a ``field_size`` square so the outer corona is inscribed in it."""
    if not field_size > 0:
        raise NonPositiveField(f"field_size must be > 0, got {field_size!r}")
    if int(eta) != eta or eta < 1:
        raise BadEta(f"eta must be an integer >= 1, got {eta!r}")
    if eta > MAX_ETA:
        # RegionId only names M1..M9
        raise BadEta(f"eta > {MAX_ETA} has no region naming, got {eta}")
    half = field_size / 2.0
    return Zoning(Point(half, half), float(field_size), int(eta), field_size / (2.0 * eta))


def polar(z: Zoning, p: Point) -> tuple[float, float]:
    """Radius and angle in [0, 2*pi) of ``p`` about the zoning centre."""
    dx = p[0] - z.center.x
    dy = p[1] - z.center.y
    theta = math.atan2(dy, dx)
    if theta < 0.0:
        theta += TWO_PI
        if theta >= TWO_PI:  # -0.0 and tiny negatives round up to 2*pi
            theta = 0.0
    return math.hypot(dx, dy), theta


def corona_of_radius(z: Zoning, r: float) -> int:
    if r > z.eta * z.beta:
        raise OutOfZone(f"radius {r:.6g} m exceeds the outer corona ({z.radius:.6g} m)")
    c = 1
    while r > c * z.beta:
        c += 1
    return c


def assign_region(z: Zoning, p: Point) -> RegionId:
    r, theta = polar(z, p)
    c = corona_of_radius(z, r)
    if c == 1:
        return RegionId.M1
    q = min(int(theta // HALF_PI), 3)
    return RegionId.from_corona(c, q)


def region_bounds(z: Zoning, region: RegionId) -> tuple[float, float, float, float]:
    """``(r_inner, r_outer, theta_lo, theta_hi)`` of the sector, angles in radians."""
    region = RegionId(region)
    if region.corona > z.eta:
        raise ValueError(f"{region.name} does not exist for eta={z.eta}")
    if region == RegionId.M1:
        return 0.0, z.beta, 0.0, TWO_PI
    c = region.corona
    q = region.quadrant
    return (c - 1) * z.beta, c * z.beta, q * HALF_PI, (q + 1) * HALF_PI


def region_area(z: Zoning, region: RegionId) -> float:
    r_in, r_out, lo, hi = region_bounds(z, region)
    return 0.5 * (r_out**2 - r_in**2) * (hi - lo)


def quadrant_bisector(region: RegionId) -> float:
    q = RegionId(region).quadrant
    if q is None:
        raise ValueError("M1 has no quadrant")
    return (q + 0.5) * HALF_PI


def region_midpoint(z: Zoning, region: RegionId) -> Point:
    """Polar midpoint of the region's annular sector (the centre for M1)."""
    region = RegionId(region)
    if region == RegionId.M1:
        return z.center
    r_in, r_out, _, _ = region_bounds(z, region)
    r_mid = 0.5 * (r_in + r_out)
    theta = quadrant_bisector(region)
    return Point(z.center.x + r_mid * math.cos(theta), z.center.y + r_mid * math.sin(theta))


def bisector_side(z: Zoning, p: Point, region: RegionId) -> int:
    """0 if ``p`` lies clockwise of the region's quadrant bisector, 1 otherwise."""
    _, theta = polar(z, p)
    return 0 if theta < quadrant_bisector(region) else 1
