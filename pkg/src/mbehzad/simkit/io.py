"""CSV serialization of metric series and run summaries."""

from __future__ import annotations

import csv
import dataclasses
from pathlib import Path
from typing import Iterable, Sequence

from .driver import RoundMetrics, SimulationResult

SERIES_COLUMNS = ("round", "alive", "sent", "received", "dropped", "energy_consumed", "residual", "mean_delay")
_FIELDS = [f.name for f in dataclasses.fields(RoundMetrics)]

SUMMARY_COLUMNS = (
    "protocol", "seed", "rounds", "fdt_round", "adt_round", "total_sent", "total_received",
    "total_dropped", "total_absorbed", "total_energy", "initial_energy", "final_residual",
)


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _parse(text: str):
    if text == "":
        return None
    try:
        return int(text)
    except ValueError:
        return float(text)


def write_csv(series: Sequence[RoundMetrics], path: str | Path) -> Path:
    """Header plus one row per round, in ``SERIES_COLUMNS`` order."""
    path = Path(path)
    with path.open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(SERIES_COLUMNS)
        for m in series:
            w.writerow([_fmt(getattr(m, f)) for f in _FIELDS])
    return path


def read_csv(path: str | Path) -> list[RoundMetrics]:
    with Path(path).open(newline="") as fh:
        rows = csv.reader(fh)
        header = next(rows)
        if tuple(header) != SERIES_COLUMNS:
            raise ValueError(f"{path}: unexpected header {header}")
        return [RoundMetrics(*(_parse(v) for v in row)) for row in rows]


def write_summary_csv(results: Iterable[SimulationResult], path: str | Path) -> Path:
    path = Path(path)
    with path.open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(SUMMARY_COLUMNS)
        for r in results:
            s = r.summary
            w.writerow([_fmt(v) for v in (
                r.protocol, s.seed, s.rounds, s.fdt_round, s.adt_round, s.total_sent,
                s.total_received, s.total_dropped, s.total_absorbed, s.total_energy,
                s.initial_energy, s.final_residual,
            )])
    return path
