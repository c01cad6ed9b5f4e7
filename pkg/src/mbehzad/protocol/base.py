"""Shared round-engine machinery: simulation state, energy debits, gating."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, ClassVar

import numpy as np

from ..channel import ChannelParams, attempt_delivery, propagation_delay
from ..network import Node, SimConfig, deploy, distance
from ..radio import aggregation_energy, rx_energy, tx_energy
from ..zoning import Zoning, build_zoning

BS = None  # next-hop value meaning "the base station"


@dataclass
class RoundOutcome:
    packets_sent: int = 0
    packets_delivered: int = 0  # arrivals at any next hop, BS included
    packets_dropped: int = 0
    packets_received_bs: int = 0
    energy_consumed: float = 0.0
    delays: list[float] = field(default_factory=list)
    newly_dead: list[int] = field(default_factory=list)

    @property
    def packets_absorbed(self) -> int:
        """Packets delivered to a cluster head and fused there."""
        return self.packets_delivered - self.packets_received_bs


@dataclass
class Packet:
    """A packet in flight; ``hops`` is the path length history in metres."""

    origin: int
    hops: list[float] = field(default_factory=list)


@dataclass(frozen=True)
class Hop:
    """One entry of the route trace kept when ``SimState.trace`` is on."""

    round: int
    src: int
    dst: int | None  # None is the base station
    tier: int
    delivered: bool


@dataclass
class SimState:
    cfg: SimConfig
    zoning: Zoning
    nodes: list[Node]
    sense_rng: np.random.Generator
    channel_rng: np.random.Generator
    protocol_rng: np.random.Generator
    round: int = 0
    trace: list[Hop] | None = None
    outcome: RoundOutcome = field(default_factory=RoundOutcome)
    values: list[float] = field(default_factory=list)

    def __post_init__(self):
        self.channel = ChannelParams(self.cfg.p_drop, self.cfg.light_speed)

    @classmethod
    def create(cls, cfg: SimConfig, seed: int | None = None, *, trace: bool = False) -> SimState:
        """Zone the field and deploy nodes with independent streams derived from ``seed``."""
        seed = cfg.seed if seed is None else seed
        deploy_ss, sense_ss, channel_ss, protocol_ss = np.random.SeedSequence(seed).spawn(4)
        z = build_zoning(cfg.field_size, cfg.eta)
        nodes = deploy(cfg, z, np.random.default_rng(deploy_ss))
        return cls(
            cfg, z, nodes,
            np.random.default_rng(sense_ss),
            np.random.default_rng(channel_ss),
            np.random.default_rng(protocol_ss),
            trace=[] if trace else None,
        )

    @property
    def alive_nodes(self) -> list[Node]:
        return [n for n in self.nodes if n.alive]

    @property
    def bs(self):
        return self.zoning.center

    def begin_round(self) -> RoundOutcome:
        self.round += 1
        self.outcome = RoundOutcome()
        self.values = sense_all(self.cfg, self.sense_rng, len(self.nodes))
        return self.outcome

    def debit(self, node: Node, amount: float) -> None:
        """Charge ``node``; the charge that exhausts it is capped at what is left."""
        if not node.alive:
            return
        spent = amount if amount < node.residual_energy else node.residual_energy
        node.residual_energy -= spent
        self.outcome.energy_consumed += spent
        if node.residual_energy <= 0.0:
            node.residual_energy = 0.0
            node.alive = False
            self.outcome.newly_dead.append(node.id)

    def wants_to_send(self, node: Node) -> bool:
        """Gate ``node``'s reading for this round and record it if it goes out."""
        value = self.values[node.id]
        if should_transmit(node, value, self.cfg):
            node.has_sent_before = True
            node.last_sent_value = value
            return True
        return False

    def send(self, src: Node, dst: Node | None, packet: Packet, tier: int) -> bool:
        """Transmit ``packet`` one hop; returns True if ``dst`` got it.

        Both radios fire whatever the channel does. A receiver that is
        already dead cannot take the packet and it counts as dropped.
        With ``drop_all_hops`` off only base-station hops are lossy.
        """
        cfg = self.cfg
        out = self.outcome
        target = self.bs if dst is None else dst.pos
        d = distance(src.pos, target)
        self.debit(src, tx_energy(cfg.radio, cfg.packet_bits_k, d))
        out.packets_sent += 1
        receiver_up = dst is None or dst.alive
        if dst is not None:
            self.debit(dst, rx_energy(cfg.radio, cfg.packet_bits_k))
        if cfg.drop_all_hops or dst is None:
            delivered = attempt_delivery(self.channel, self.channel_rng)
        else:
            delivered = True
        delivered = delivered and receiver_up
        if self.trace is not None:
            self.trace.append(Hop(self.round, src.id, None if dst is None else dst.id, tier, delivered))
        if not delivered:
            out.packets_dropped += 1
            return False
        out.packets_delivered += 1
        packet.hops.append(d)
        if dst is None:
            out.packets_received_bs += 1
            out.delays.append(propagation_delay(self.channel, packet.hops))
        return True

    def aggregate(self, ch: Node, n_signals: int) -> None:
        if n_signals > 0:
            self.debit(ch, aggregation_energy(self.cfg.radio, self.cfg.packet_bits_k, n_signals))


def fuse(packets: list[Packet], origin: int) -> Packet:
    """One aggregate packet carrying the longest path among its inputs."""
    longest = max(packets, key=lambda p: sum(p.hops), default=None)
    return Packet(origin, list(longest.hops) if longest else [])


def sense(cfg: SimConfig, rng: np.random.Generator) -> float:
    """One reading of the sensed attribute, uniform over ``[attr_min, attr_max]``."""
    return float(rng.uniform(cfg.attr_min, cfg.attr_max))


def sense_all(cfg: SimConfig, rng: np.random.Generator, n: int) -> list[float]:
    """Readings for ``n`` nodes at once (every node draws, alive or not)."""
    return rng.uniform(cfg.attr_min, cfg.attr_max, size=n).tolist()


def should_transmit(node: Node, value: float, cfg: SimConfig) -> bool:
    if value < cfg.hard_threshold:
        return False
    if not node.has_sent_before:
        return True
    if cfg.soft_mode == "delta":
        return abs(value - node.last_sent_value) >= cfg.soft_threshold
    return value >= cfg.soft_threshold


class Protocol:
    """Round-engine interface. Subclasses set ``name`` and implement the hooks."""

    name: ClassVar[str]

    def setup(self, state: SimState) -> None:
        """Called once after deployment."""

    def run_round(self, state: SimState) -> RoundOutcome:
        raise NotImplementedError


REGISTRY: dict[str, Callable[[], Protocol]] = {}


def register(cls):
    REGISTRY[cls.name] = cls
    return cls


def make_protocol(name: str) -> Protocol:
    try:
        return REGISTRY[name]()
    except KeyError:
        raise KeyError(f"unknown protocol {name!r}; choose from {sorted(REGISTRY)}") from None
