"""Node state, simulation configuration and per-region deployment."""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Mapping

import numpy as np
import yaml

from .errors import ConfigError
from .radio import RadioParams
from .zoning import Point, RegionId, Zoning, assign_region, region_bounds


class Role(Enum):
    MEMBER = "member"
    CLUSTER_HEAD = "cluster_head"


@dataclass(slots=True)
class Node:
    id: int
    pos: Point
    region: RegionId
    initial_energy: float
    residual_energy: float
    alive: bool = True
    role: Role = Role.MEMBER
    has_sent_before: bool = False
    last_sent_value: float | None = None


def _default_counts() -> dict[RegionId, int]:
    counts = {r: 10 for r in RegionId}
    counts[RegionId.M1] = 20
    return counts


SOFT_MODES = ("delta", "literal")
NEXT_HOP_MODES = ("adjacent_min", "fixed")
RADIO_KEYS = ("e_elec", "eps_fs", "eps_mp", "e_da")


@dataclass(frozen=True)
class SimConfig:
    field_size: float = 100.0
    eta: int = 3
    counts_per_region: Mapping[RegionId, int] = field(default_factory=_default_counts)
    base_energy_e0: float = 0.7
    alpha: float = 0.5
    radio: RadioParams = field(default_factory=RadioParams)
    packet_bits_k: int = 4000
    # sensed attribute, TEEN-style temperature scale
    hard_threshold: float = 100.0
    soft_threshold: float = 2.0
    attr_min: float = 0.0
    attr_max: float = 200.0
    soft_mode: str = "delta"
    p_drop: float = 0.3
    drop_all_hops: bool = True
    light_speed: float = 2.998e8
    next_hop_mode: str = "adjacent_min"
    p_ch: float = 0.05
    max_rounds: int = 20000
    seed: int = 0
    runs: int = 5

    def __post_init__(self):
        counts = {}
        for key, n in dict(self.counts_per_region).items():
            try:
                region = key if isinstance(key, RegionId) else RegionId[str(key).upper()]
            except KeyError:
                raise ConfigError(f"unknown region {key!r} in counts_per_region") from None
            counts[region] = n
        for region in RegionId:
            counts.setdefault(region, 0)
        object.__setattr__(self, "counts_per_region", counts)
        self.validate()

    def validate(self) -> None:
        def need(cond: bool, msg: str) -> None:
            if not cond:
                raise ConfigError(msg)

        need(self.field_size > 0, f"field_size must be > 0, got {self.field_size}")
        need(isinstance(self.eta, int) and 1 <= self.eta <= 3, f"eta must be 1, 2 or 3, got {self.eta}")
        for region, n in self.counts_per_region.items():
            need(isinstance(n, int) and n >= 0, f"count for {region.name} must be a non-negative integer, got {n!r}")
            need(n == 0 or region.corona <= self.eta, f"{region.name} does not exist for eta={self.eta} but has {n} nodes")
        need(self.base_energy_e0 > 0, f"base_energy_e0 must be > 0, got {self.base_energy_e0}")
        need(self.alpha >= 0, f"alpha must be >= 0, got {self.alpha}")
        need(isinstance(self.packet_bits_k, int) and self.packet_bits_k > 0, f"packet_bits_k must be a positive integer, got {self.packet_bits_k!r}")
        need(self.attr_min <= self.attr_max, f"attr_min ({self.attr_min}) must not exceed attr_max ({self.attr_max})")
        need(self.soft_mode in SOFT_MODES, f"soft_mode must be one of {SOFT_MODES}, got {self.soft_mode!r}")
        need(0.0 <= self.p_drop <= 1.0, f"p_drop must lie in [0, 1], got {self.p_drop}")
        need(self.light_speed > 0, f"light_speed must be > 0, got {self.light_speed}")
        need(self.next_hop_mode in NEXT_HOP_MODES, f"next_hop_mode must be one of {NEXT_HOP_MODES}, got {self.next_hop_mode!r}")
        need(0.0 < self.p_ch <= 1.0, f"p_ch must lie in (0, 1], got {self.p_ch}")
        need(isinstance(self.max_rounds, int) and self.max_rounds >= 0, f"max_rounds must be a non-negative integer, got {self.max_rounds!r}")
        need(isinstance(self.seed, int) and self.seed >= 0, f"seed must be a non-negative integer, got {self.seed!r}")
        need(isinstance(self.runs, int) and self.runs >= 1, f"runs must be a positive integer, got {self.runs!r}")

    @property
    def n_nodes(self) -> int:
        return sum(self.counts_per_region.values())

    def replace(self, **changes: Any) -> SimConfig:
        return dataclasses.replace(self, **changes)

    @classmethod
    def from_mapping(cls, data: Mapping[str, Any]) -> SimConfig:
        """Build a config from flat keys; radio parameters appear as top-level keys."""
        data = dict(data)
        known = {f.name for f in dataclasses.fields(cls)} - {"radio"}
        unknown = sorted(set(data) - known - set(RADIO_KEYS))
        if unknown:
            raise ConfigError(f"unknown config key(s): {', '.join(unknown)}")
        radio_kw = {k: data.pop(k) for k in RADIO_KEYS if k in data}
        try:
            radio = RadioParams(**radio_kw)
        except (TypeError, ValueError) as exc:
            raise ConfigError(str(exc)) from None
        if "counts_per_region" in data and not isinstance(data["counts_per_region"], Mapping):
            raise ConfigError("counts_per_region must be a mapping like {M1: 20, M2: 10}")
        try:
            return cls(radio=radio, **data)
        except TypeError as exc:
            raise ConfigError(str(exc)) from None

    def to_mapping(self) -> dict[str, Any]:
        out: dict[str, Any] = {}
        for f in dataclasses.fields(self):
            value = getattr(self, f.name)
            if f.name == "radio":
                out.update(dataclasses.asdict(value))
            elif f.name == "counts_per_region":
                out[f.name] = {r.name: n for r, n in value.items()}
            else:
                out[f.name] = value
        return out


def load_config(path: str | Path) -> SimConfig:
    """Read a flat YAML key/value file into a :class:`SimConfig`."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc.strerror or exc}") from None
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ConfigError(f"{path} is not valid YAML: {exc}") from None
    if data is None:
        data = {}
    if not isinstance(data, Mapping):
        raise ConfigError(f"{path} must contain a key/value mapping at top level")
    return SimConfig.from_mapping(data)


def initial_energy(cfg: SimConfig, region: RegionId) -> float:
    """Corona-1 nodes get the heterogeneity bonus ``e0 * (1 + alpha)``."""
    if RegionId(region) == RegionId.M1:
        return cfg.base_energy_e0 * (1.0 + cfg.alpha)
    return cfg.base_energy_e0


def sample_sector(z: Zoning, region: RegionId, n: int, rng: np.random.Generator) -> np.ndarray:
    """``n`` points uniform over a region by polar inverse-CDF sampling, shape (n, 2)."""
    r_in, r_out, lo, hi = region_bounds(z, region)
    r = np.sqrt(rng.uniform(r_in * r_in, r_out * r_out, size=n))
    theta = rng.uniform(lo, hi, size=n)
    return np.column_stack((z.center.x + r * np.cos(theta), z.center.y + r * np.sin(theta)))


def deploy(cfg: SimConfig, z: Zoning, rng: np.random.Generator) -> list[Node]:
    nodes: list[Node] = []
    for region in RegionId:
        n = cfg.counts_per_region.get(region, 0)
        if n < 0:
            raise ConfigError(f"count for {region.name} must be >= 0, got {n}")
        if n == 0:
            continue
        e = initial_energy(cfg, region)
        for x, y in sample_sector(z, region, n, rng).tolist():
            p = Point(x, y)
            # a draw landing within rounding error of a sector edge can round
            # into the neighbour; redraw so the recorded region is always exact
            while assign_region(z, p) != region:
                (x, y), = sample_sector(z, region, 1, rng).tolist()
                p = Point(x, y)
            nodes.append(Node(len(nodes), p, region, e, e))
    return nodes


def distance(a: Point, b: Point) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])
