"""Direct transmission: every gated reading goes straight to the base station."""

from __future__ import annotations

from .base import Packet, Protocol, RoundOutcome, SimState, register


@register
class Direct(Protocol):
    name = "direct"

    def run_round(self, state: SimState) -> RoundOutcome:
        out = state.begin_round()
        for n in state.nodes:
            if n.alive and state.wants_to_send(n):
                state.send(n, None, Packet(n.id), tier=3)
        return out
