"""Run protocols round by round and reduce the outcomes to metric series."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from statistics import fmean
from typing import Callable

from ..errors import ConfigError
from ..network import SimConfig
from ..protocol import Protocol, RoundOutcome, SimState, make_protocol

log = logging.getLogger(__name__)

Observer = Callable[[SimState, Protocol, RoundOutcome], None]


@dataclass
class RoundMetrics:
    round: int
    alive: float
    packets_sent: float
    packets_received_bs: float
    packets_dropped: float
    energy_consumed_this_round: float
    total_residual_energy: float
    mean_delay: float


@dataclass
class SummaryStats:
    fdt_round: int | None  # None: not reached within max_rounds
    adt_round: int | None
    total_sent: int
    total_received: int
    total_dropped: int
    total_energy: float
    initial_energy: float = 0.0
    final_residual: float = 0.0
    total_absorbed: int = 0
    rounds: int = 0
    seed: int = 0


@dataclass
class SimulationResult:
    protocol: str
    series: list[RoundMetrics]
    summary: SummaryStats


@dataclass
class AggregateResult:
    protocol: str
    series: list[RoundMetrics]
    runs: list[SimulationResult] = field(default_factory=list)

    @property
    def summaries(self) -> list[SummaryStats]:
        return [r.summary for r in self.runs]

    @property
    def mean_fdt(self) -> float | None:
        return _mean_reached([s.fdt_round for s in self.summaries], "FDT", self.protocol)

    @property
    def mean_adt(self) -> float | None:
        return _mean_reached([s.adt_round for s in self.summaries], "ADT", self.protocol)


def _mean_reached(values: list[int | None], label: str, protocol: str) -> float | None:
    reached = [v for v in values if v is not None]
    if len(reached) < len(values):
        log.warning("%s: %d of %d runs never reached %s; excluded from the mean",
                    protocol, len(values) - len(reached), len(values), label)
    return fmean(reached) if reached else None


def run_simulation(
    cfg: SimConfig,
    protocol: str | Protocol = "mbehzad",
    *,
    seed: int | None = None,
    max_rounds: int | None = None,
    observer: Observer | None = None,
    trace: bool = False,
) -> SimulationResult:
    """Deploy, then elect/run/record until the network dies or ``max_rounds`` is hit."""
    cfg.validate()
    seed = cfg.seed if seed is None else seed
    max_rounds = cfg.max_rounds if max_rounds is None else max_rounds
    if max_rounds < 0:
        raise ConfigError(f"max_rounds must be >= 0, got {max_rounds}")
    proto = make_protocol(protocol) if isinstance(protocol, str) else protocol

    state = SimState.create(cfg, seed, trace=trace)
    proto.setup(state)
    n_nodes = len(state.nodes)
    initial = sum(n.initial_energy for n in state.nodes)
    alive = sum(n.alive for n in state.nodes)

    series: list[RoundMetrics] = []
    fdt = adt = None
    sent = received = dropped = absorbed = 0
    consumed = 0.0
    while state.round < max_rounds and alive > 0:
        out = proto.run_round(state)
        if observer is not None:
            observer(state, proto, out)
        alive -= len(out.newly_dead)
        residual = sum(n.residual_energy for n in state.nodes)
        series.append(RoundMetrics(
            state.round, alive, out.packets_sent, out.packets_received_bs, out.packets_dropped,
            out.energy_consumed, residual, fmean(out.delays) if out.delays else 0.0,
        ))
        sent += out.packets_sent
        received += out.packets_received_bs
        dropped += out.packets_dropped
        absorbed += out.packets_absorbed
        consumed += out.energy_consumed
        if fdt is None and alive < n_nodes:
            fdt = state.round
        if adt is None and alive == 0:
            adt = state.round

    summary = SummaryStats(
        fdt, adt, sent, received, dropped, consumed,
        initial_energy=initial,
        final_residual=sum(n.residual_energy for n in state.nodes),
        total_absorbed=absorbed,
        rounds=state.round,
        seed=seed,
    )
    return SimulationResult(proto.name, series, summary)


def _padded(series: list[RoundMetrics], length: int) -> list[RoundMetrics]:
    if len(series) >= length:
        return series
    last = series[-1] if series else None
    alive = last.alive if last else 0
    residual = last.total_residual_energy if last else 0.0
    start = len(series)
    return series + [
        RoundMetrics(start + i + 1, alive, 0, 0, 0, 0.0, residual, 0.0)
        for i in range(length - start)
    ]


def mean_series(runs: list[list[RoundMetrics]]) -> list[RoundMetrics]:
    """Per-round means; shorter (dead) runs are padded with zero traffic."""
    length = max((len(s) for s in runs), default=0)
    padded = [_padded(s, length) for s in runs]
    out = []
    for i in range(length):
        rows = [s[i] for s in padded]
        out.append(RoundMetrics(
            i + 1,
            fmean(r.alive for r in rows),
            fmean(r.packets_sent for r in rows),
            fmean(r.packets_received_bs for r in rows),
            fmean(r.packets_dropped for r in rows),
            fmean(r.energy_consumed_this_round for r in rows),
            fmean(r.total_residual_energy for r in rows),
            fmean(r.mean_delay for r in rows),
        ))
    return out


def aggregate_runs(
    cfg: SimConfig,
    protocol: str = "mbehzad",
    *,
    runs: int | None = None,
    max_rounds: int | None = None,
    workers: int | None = None,
) -> AggregateResult:
    """Repeat a simulation with seeds ``cfg.seed, cfg.seed + 1, ...`` and average.

    ``workers > 1`` runs seeds in separate processes; results are always
    merged in seed order, so the output does not depend on scheduling.
    """
    runs = cfg.runs if runs is None else runs
    if runs < 1:
        raise ConfigError(f"runs must be >= 1, got {runs}")
    seeds = [cfg.seed + i for i in range(runs)]
    if workers and workers > 1 and runs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=min(workers, runs)) as pool:
            results = list(pool.map(_run_one, [(cfg, protocol, s, max_rounds) for s in seeds]))
    else:
        results = [_run_one((cfg, protocol, s, max_rounds)) for s in seeds]
    return AggregateResult(protocol, mean_series([r.series for r in results]), results)


def _run_one(args) -> SimulationResult:
    cfg, protocol, seed, max_rounds = args
    return run_simulation(cfg, protocol, seed=seed, max_rounds=max_rounds)
