from .base import (
    BS,
    REGISTRY,
    Hop,
    Packet,
    Protocol,
    RoundOutcome,
    SimState,
    make_protocol,
    register,
    sense,
    sense_all,
    should_transmit,
)
from .direct import Direct
from .leach import Leach, leach_threshold
from .mbehzad import MBehzad, elect_cluster_heads, next_hop, next_hop_candidates

__all__ = [
    "BS",
    "REGISTRY",
    "Direct",
    "Hop",
    "Leach",
    "MBehzad",
    "Packet",
    "Protocol",
    "RoundOutcome",
    "SimState",
    "elect_cluster_heads",
    "leach_threshold",
    "make_protocol",
    "next_hop",
    "next_hop_candidates",
    "register",
    "sense",
    "sense_all",
    "should_transmit",
]
