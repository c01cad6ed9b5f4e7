"""LEACH-style baseline with the same radio, channel and threshold gating."""

from __future__ import annotations

import math

from ..network import Node, Role, distance
from .base import Packet, Protocol, RoundOutcome, SimState, fuse, register


def leach_threshold(p: float, round_no: int) -> float:
    """Self-election probability ``p / (1 - p * (r mod G))`` with ``G = floor(1/p)``.

    ``round_no`` is 1-based, so round 1 starts an epoch.
    """
    epoch = max(1, math.floor(1.0 / p))
    return p / (1.0 - p * ((round_no - 1) % epoch))


@register
class Leach(Protocol):
    name = "leach"

    def __init__(self, p_ch: float | None = None):
        self.p_ch = p_ch
        self.last_ch_round: dict[int, int] = {}
        self.heads: list[int] = []

    def setup(self, state: SimState) -> None:
        if self.p_ch is None:
            self.p_ch = state.cfg.p_ch

    def elect(self, state: SimState) -> list[int]:
        if self.p_ch is None:
            self.setup(state)
        p = self.p_ch
        r = state.round
        epoch = max(1, math.floor(1.0 / p))
        t = leach_threshold(p, r)
        heads = []
        for n in state.nodes:
            n.role = Role.MEMBER
            if not n.alive:
                continue
            # eligibility resets at each epoch boundary, matching the threshold
            last = self.last_ch_round.get(n.id)
            eligible = last is None or (last - 1) // epoch < (r - 1) // epoch
            # one draw per alive node keeps the stream independent of eligibility
            u = state.protocol_rng.random()
            if eligible and u < t:
                heads.append(n.id)
                self.last_ch_round[n.id] = r
                n.role = Role.CLUSTER_HEAD
        self.heads = heads
        return heads

    def run_round(self, state: SimState) -> RoundOutcome:
        out = state.begin_round()
        nodes = state.nodes
        heads = [nodes[i] for i in self.elect(state)]
        head_ids = {h.id for h in heads}

        if not heads:
            for n in nodes:
                if n.alive and state.wants_to_send(n):
                    state.send(n, None, Packet(n.id), tier=3)
            return out

        inbox: dict[int, list[Packet]] = {h.id: [] for h in heads}
        for n in nodes:
            if not n.alive or n.id in head_ids:
                continue
            if state.wants_to_send(n):
                ch = _nearest_head(n, heads)
                p = Packet(n.id)
                if state.send(n, ch, p, tier=1):
                    inbox[ch.id].append(p)

        for ch in heads:
            if not ch.alive:
                continue
            received = inbox[ch.id]
            state.aggregate(ch, len(received))
            own = [Packet(ch.id)] if ch.alive and state.wants_to_send(ch) else []
            if ch.alive and (received or own):
                state.send(ch, None, fuse(received + own, ch.id), tier=3)
        return out


def _nearest_head(n: Node, heads: list[Node]) -> Node:
    return min(heads, key=lambda h: (distance(n.pos, h.pos), h.id))
