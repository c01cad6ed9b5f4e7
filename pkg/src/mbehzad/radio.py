"""First-order radio energy model.

Transmission pays electronics energy per bit plus an amplifier term that
follows a d**2 free-space law below the crossover distance and a d**4
multipath law at or beyond it. Reception pays electronics energy only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

from .errors import NegativeInput


@dataclass(frozen=True)
class RadioParams:
    e_elec: float = 50e-9  # J/bit
    eps_fs: float = 10e-12  # J/bit/m^2
    eps_mp: float = 0.0013e-12  # J/bit/m^4
    e_da: float = 5e-9  # J/bit/signal

    def __post_init__(self):
        for name in ("e_elec", "eps_fs", "eps_mp", "e_da"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and value > 0 and math.isfinite(value)):
                raise ValueError(f"RadioParams.{name} must be a finite positive number, got {value!r}")

    @cached_property
    def d0(self) -> float:
        return threshold_distance(self)


def threshold_distance(rp: RadioParams) -> float:
    """Crossover distance between the free-space and multipath laws, in metres."""
    return math.sqrt(rp.eps_fs / rp.eps_mp)


def tx_energy(rp: RadioParams, k: float, d: float) -> float:
    """Energy (J) to transmit ``k`` bits over ``d`` metres."""
    if k < 0 or d < 0:
        raise NegativeInput(f"k and d must be >= 0, got k={k!r}, d={d!r}")
    if d < rp.d0:
        return rp.e_elec * k + rp.eps_fs * k * d * d
    return rp.e_elec * k + rp.eps_mp * k * d**4


def rx_energy(rp: RadioParams, k: float) -> float:
    if k < 0:
        raise NegativeInput(f"k must be >= 0, got {k!r}")
    return rp.e_elec * k


def aggregation_energy(rp: RadioParams, k: float, n_signals: int) -> float:
    """Cost of fusing ``n_signals`` packets of ``k`` bits at a cluster head."""
    if k < 0 or n_signals < 0:
        raise NegativeInput(f"k and n_signals must be >= 0, got k={k!r}, n={n_signals!r}")
    return rp.e_da * k * n_signals
