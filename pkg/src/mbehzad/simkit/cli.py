"""Command-line entry point: ``mbehzad run`` and ``mbehzad compare``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from ..errors import ConfigError
from ..network import SimConfig, load_config
from ..protocol import REGISTRY
from .driver import aggregate_runs, run_simulation
from .io import write_csv, write_summary_csv
from .plots import emit_plots


def _config(path: str | None) -> SimConfig:
    return load_config(path) if path else SimConfig()


def _protocols(text: str) -> list[str]:
    names = [p.strip() for p in text.split(",") if p.strip()]
    bad = [p for p in names if p not in REGISTRY]
    if bad or not names:
        raise ConfigError(f"unknown protocol(s) {bad or text!r}; choose from {', '.join(sorted(REGISTRY))}")
    return names


def cmd_run(args) -> None:
    cfg = _config(args.config)
    overrides = {}
    if args.seed is not None:
        overrides["seed"] = args.seed
    if args.rounds is not None:
        overrides["max_rounds"] = args.rounds
    cfg = cfg.replace(**overrides) if overrides else cfg
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    result = run_simulation(cfg, args.protocol)
    write_csv(result.series, out / f"{args.protocol}.csv")
    write_summary_csv([result], out / f"{args.protocol}_summary.csv")
    if args.plots and result.series:
        emit_plots({args.protocol: result.series}, out, n_nodes=cfg.n_nodes)
    s = result.summary
    print(f"{args.protocol}: {s.rounds} rounds, FDT={s.fdt_round}, ADT={s.adt_round}, "
          f"sent={s.total_sent}, received={s.total_received}, dropped={s.total_dropped}")


def cmd_compare(args) -> None:
    cfg = _config(args.config)
    overrides = {}
    if args.runs is not None:
        overrides["runs"] = args.runs
    if args.seed is not None:
        overrides["seed"] = args.seed
    if args.rounds is not None:
        overrides["max_rounds"] = args.rounds
    cfg = cfg.replace(**overrides) if overrides else cfg
    protocols = _protocols(args.protocols)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    results = {p: aggregate_runs(cfg, p, workers=args.workers) for p in protocols}
    for p, agg in results.items():
        write_csv(agg.series, out / f"{p}_mean.csv")
    write_summary_csv([r for agg in results.values() for r in agg.runs], out / "summary.csv")
    if args.plots and all(agg.series for agg in results.values()):
        emit_plots({p: agg.series for p, agg in results.items()}, out, n_nodes=cfg.n_nodes)
    for p, agg in results.items():
        print(f"{p}: mean FDT={agg.mean_fdt}, mean ADT={agg.mean_adt} over {cfg.runs} runs")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mbehzad", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="simulate one protocol with one seed")
    run.add_argument("--config", help="YAML file of SimConfig keys (defaults if omitted)")
    run.add_argument("--protocol", default="mbehzad", choices=sorted(REGISTRY))
    run.add_argument("--seed", type=int)
    run.add_argument("--rounds", type=int, help="round cap (overrides max_rounds)")
    run.add_argument("--out", required=True)
    run.add_argument("--plots", action="store_true", help="also write SVG plots")
    run.set_defaults(func=cmd_run)

    cmp_ = sub.add_parser("compare", help="average several seeds for several protocols")
    cmp_.add_argument("--config")
    cmp_.add_argument("--protocols", default="mbehzad,leach", help="comma-separated, e.g. mbehzad,leach,direct")
    cmp_.add_argument("--runs", type=int)
    cmp_.add_argument("--seed", type=int)
    cmp_.add_argument("--rounds", type=int)
    cmp_.add_argument("--workers", type=int, default=1, help="parallel processes per protocol")
    cmp_.add_argument("--out", required=True)
    cmp_.add_argument("--plots", action="store_true")
    cmp_.set_defaults(func=cmd_compare)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
