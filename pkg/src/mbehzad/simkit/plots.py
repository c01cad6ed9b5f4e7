"""Static SVG plots of metric series, one file per metric, protocols overlaid."""

from __future__ import annotations

from itertools import accumulate
from pathlib import Path
from typing import Mapping, Sequence

from matplotlib.backends.backend_svg import FigureCanvasSVG
from matplotlib.figure import Figure

from .driver import RoundMetrics

# file stem -> (y label, extractor over (series, n_nodes))
METRICS = {
    "packets_sent": ("Packets sent (cumulative)", lambda s, n: list(accumulate(m.packets_sent for m in s))),
    "packets_dropped": ("Packets dropped (cumulative)", lambda s, n: list(accumulate(m.packets_dropped for m in s))),
    "packets_received": ("Packets received at BS (cumulative)", lambda s, n: list(accumulate(m.packets_received_bs for m in s))),
    "alive_nodes": ("Alive nodes", lambda s, n: [m.alive for m in s]),
    "dead_nodes": ("Dead nodes", lambda s, n: [n - m.alive for m in s]),
    "delay": ("Mean propagation delay (s)", lambda s, n: [m.mean_delay for m in s]),
    "energy": ("Energy consumed (J, cumulative)", lambda s, n: list(accumulate(m.energy_consumed_this_round for m in s))),
}


def emit_plots(
    series_set: Mapping[str, Sequence[RoundMetrics]],
    out_dir: str | Path,
    *,
    n_nodes: Mapping[str, float] | float | None = None,
) -> list[Path]:
    """Write ``<metric>.svg`` for every metric in :data:`METRICS`.

    ``n_nodes`` is the deployed node count behind the dead-node curve, per
    protocol or as one number; it defaults to each series' peak alive count.
    Inputs are validated before the first file is written.
    """
    if not series_set:
        raise ValueError("no series to plot")
    empty = [name for name, s in series_set.items() if not s]
    if empty:
        raise ValueError(f"empty series for: {', '.join(empty)}")
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    def total(name: str, s: Sequence[RoundMetrics]) -> float:
        if isinstance(n_nodes, Mapping):
            return n_nodes[name]
        if n_nodes is not None:
            return n_nodes
        return max(m.alive for m in s)

    written = []
    for stem, (ylabel, extract) in METRICS.items():
        fig = Figure(figsize=(6.4, 4.0))
        FigureCanvasSVG(fig)
        ax = fig.add_subplot()
        for name, s in series_set.items():
            ax.plot([m.round for m in s], extract(s, total(name, s)), label=name, linewidth=1.2)
        ax.set_xlabel("Round")
        ax.set_ylabel(ylabel)
        ax.grid(True, alpha=0.3)
        ax.legend()
        fig.tight_layout()
        path = out_dir / f"{stem}.svg"
        fig.savefig(path, format="svg", metadata={"Date": None})
        written.append(path)
    return written
