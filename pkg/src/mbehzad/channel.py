"""Lossy link model: independent Bernoulli drops and light-speed delay."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import NegativeInput

SPEED_OF_LIGHT = 2.998e8  # m/s


@dataclass(frozen=True)
class ChannelParams:
    p_drop: float = 0.3
    light_speed: float = SPEED_OF_LIGHT

    def __post_init__(self):
        if not 0.0 <= self.p_drop <= 1.0:
            raise ValueError(f"p_drop must lie in [0, 1], got {self.p_drop!r}")
        if not self.light_speed > 0:
            raise ValueError(f"light_speed must be > 0, got {self.light_speed!r}")


def attempt_delivery(cp: ChannelParams, rng: np.random.Generator) -> bool:
    """Return True if the packet survives the hop.

    Exactly one uniform draw is consumed per attempt, whatever ``p_drop`` is,
    so the stream position depends only on the number of attempts.
    """
    return rng.random() >= cp.p_drop


def propagation_delay(cp: ChannelParams, hop_distances: Iterable[float]) -> float:
    hops = list(hop_distances)
    if any(d < 0 for d in hops):
        raise NegativeInput(f"hop distances must be >= 0, got {hops!r}")
    return math.fsum(hops) / cp.light_speed
