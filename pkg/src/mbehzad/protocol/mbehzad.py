"""M-BEHZAD round engine.

Each round one cluster head is picked per middle/outer region: the alive
node nearest the region's midpoint. Outer-region heads are kept on the same
side of the quadrant bisector as the head of the radially aligned middle
region. Traffic then flows in three tiers::

    member -> CH  |  outer CH -> middle CH  |  middle CH, M1 node -> BS
"""

from __future__ import annotations

from typing import Mapping, Sequence

from ..network import Node, Role, distance
from ..zoning import (
    MIDDLE_REGIONS,
    OUTER_REGIONS,
    RegionId,
    Zoning,
    bisector_side,
    paired_middle,
    region_midpoint,
)
from .base import BS, Packet, Protocol, RoundOutcome, SimState, fuse, register

ChAssignment = dict[RegionId, int]


def _nearest(candidates: list[Node], target) -> Node | None:
    # ties go to the lowest id: candidates arrive in id order and min() is stable
    return min(candidates, key=lambda n: distance(n.pos, target), default=None)


def elect_cluster_heads(nodes: Sequence[Node], z: Zoning) -> ChAssignment:
    """Minimum-distance-to-midpoint election with paired-region side sync.

    Regions without an alive node get no entry; M1 never has a head.
    """
    by_region: dict[RegionId, list[Node]] = {}
    for n in sorted(nodes, key=lambda n: n.id):
        if n.alive and n.region != RegionId.M1:
            by_region.setdefault(n.region, []).append(n)

    chs: ChAssignment = {}
    for region in MIDDLE_REGIONS:
        ch = _nearest(by_region.get(region, []), region_midpoint(z, region))
        if ch is not None:
            chs[region] = ch.id

    lookup = {n.id: n for n in nodes}
    for region in OUTER_REGIONS:
        candidates = by_region.get(region, [])
        if not candidates:
            continue
        mid = region_midpoint(z, region)
        inner = paired_middle(region)
        pool = candidates
        if inner in chs:
            side = bisector_side(z, lookup[chs[inner]].pos, inner)
            same_side = [n for n in candidates if bisector_side(z, n.pos, region) == side]
            if same_side:
                pool = same_side
        chs[region] = _nearest(pool, mid).id
    return chs


def next_hop_candidates(region: RegionId, mode: str) -> tuple[RegionId, ...]:
    """Middle regions an outer head may relay through, in preference order."""
    aligned = paired_middle(region)
    if mode == "fixed":
        return (aligned,)
    if mode == "adjacent_min":
        q = aligned.quadrant
        return (aligned, RegionId(2 + (q + 1) % 4), RegionId(2 + (q - 1) % 4))
    raise ValueError(f"unknown next_hop_mode {mode!r}")


def next_hop(region: RegionId, chs: Mapping[RegionId, int], nodes: Sequence[Node], mode: str = "adjacent_min") -> int | None:
    """Node id of the middle-corona head an outer head relays to, or ``None`` for the BS."""
    region = RegionId(region)
    src = nodes[chs[region]].pos

    def closest(regions) -> int | None:
        ids = [chs[r] for r in regions if r in chs]
        if not ids:
            return None
        return min(ids, key=lambda i: (distance(src, nodes[i].pos), i))

    hop = closest(next_hop_candidates(region, mode))
    if hop is None:
        hop = closest(MIDDLE_REGIONS)
    return hop


@register
class MBehzad(Protocol):
    name = "mbehzad"

    def __init__(self):
        self.chs: ChAssignment = {}

    def elect(self, state: SimState) -> ChAssignment:
        self.chs = elect_cluster_heads(state.nodes, state.zoning)
        heads = set(self.chs.values())
        for n in state.nodes:
            n.role = Role.CLUSTER_HEAD if n.id in heads else Role.MEMBER
        return self.chs

    def run_round(self, state: SimState) -> RoundOutcome:
        out = state.begin_round()
        nodes = state.nodes
        chs = self.elect(state)
        heads = set(chs.values())

        # Tier 1: members report to the head of their own region
        inbox: dict[int, list[Packet]] = {h: [] for h in heads}
        for n in nodes:
            if not n.alive or n.region == RegionId.M1 or n.id in heads:
                continue
            if state.wants_to_send(n):
                ch = chs[n.region]
                p = Packet(n.id)
                if state.send(n, nodes[ch], p, tier=1):
                    inbox[ch].append(p)

        ready: dict[int, Packet] = {}
        for region in (*MIDDLE_REGIONS, *OUTER_REGIONS):
            if region not in chs:
                continue
            ch = nodes[chs[region]]
            if not ch.alive:
                continue
            received = inbox[ch.id]
            state.aggregate(ch, len(received))
            own = [Packet(ch.id)] if ch.alive and state.wants_to_send(ch) else []
            if ch.alive and (received or own):
                ready[ch.id] = fuse(received + own, ch.id)

        # Tier 2: outer heads relay inward
        relayed: dict[int, list[Packet]] = {h: [] for h in heads}
        for region in OUTER_REGIONS:
            if region not in chs or chs[region] not in ready:
                continue
            ch = nodes[chs[region]]
            if not ch.alive:
                continue
            p = ready.pop(ch.id)
            hop = next_hop(region, chs, nodes, state.cfg.next_hop_mode)
            if hop is BS:
                state.send(ch, None, p, tier=3)
            elif state.send(ch, nodes[hop], p, tier=2):
                relayed[hop].append(p)

        for region in MIDDLE_REGIONS:
            if region not in chs:
                continue
            ch = nodes[chs[region]]
            if not ch.alive:
                ready.pop(ch.id, None)
                continue
            extra = relayed[ch.id]
            state.aggregate(ch, len(extra))
            parts = ([ready[ch.id]] if ch.id in ready else []) + extra
            if ch.alive and parts:
                ready[ch.id] = fuse(parts, ch.id)
            else:
                ready.pop(ch.id, None)

        # Tier 3: inner-disc nodes and middle heads reach the base station
        for n in nodes:
            if n.alive and n.region == RegionId.M1 and state.wants_to_send(n):
                state.send(n, None, Packet(n.id), tier=3)
        for region in MIDDLE_REGIONS:
            if region in chs and chs[region] in ready:
                state.send(nodes[chs[region]], None, ready[chs[region]], tier=3)
        return out
