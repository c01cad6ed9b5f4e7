import logging

import pytest

from mbehzad.errors import ConfigError
from mbehzad.network import SimConfig
from mbehzad.protocol import SimState
from mbehzad.radio import tx_energy
from mbehzad.simkit import (
    METRICS,
    RoundMetrics,
    aggregate_runs,
    emit_plots,
    mean_series,
    read_csv,
    run_simulation,
    write_csv,
    write_summary_csv,
)

from helpers import OPEN, dist

SMALL = SimConfig(counts_per_region={"M1": 4, "M2": 3, "M6": 3, "M8": 2}, base_energy_e0=0.01, max_rounds=3000)


def test_zero_rounds():
    res = run_simulation(SimConfig(max_rounds=0))
    assert res.series == []
    assert res.summary.fdt_round is None and res.summary.adt_round is None


def test_single_node_dies_on_first_send():
    base = SimConfig(counts_per_region={"M1": 1}, alpha=0.0, **OPEN)
    pos = SimState.create(base, seed=0).nodes[0].pos
    e = tx_energy(base.radio, base.packet_bits_k, dist(pos, (50, 50)))
    res = run_simulation(base.replace(base_energy_e0=e), "mbehzad", seed=0)
    assert len(res.series) == 1
    assert res.summary.fdt_round == res.summary.adt_round == 1
    assert res.series[0].alive == 0
    assert res.summary.total_energy == e


@pytest.mark.parametrize("protocol", ["mbehzad", "leach", "direct"])
def test_series_invariants(protocol):
    res = run_simulation(SMALL, protocol, seed=1)
    s = res.summary
    assert s.adt_round == len(res.series)
    assert s.fdt_round <= s.adt_round
    alive = [m.alive for m in res.series]
    residual = [m.total_residual_energy for m in res.series]
    assert alive == sorted(alive, reverse=True)
    assert residual == sorted(residual, reverse=True)
    assert s.fdt_round == next(m.round for m in res.series if m.alive < SMALL.n_nodes)
    assert s.adt_round == next(m.round for m in res.series if m.alive == 0)
    assert s.total_sent == s.total_received + s.total_dropped + s.total_absorbed
    assert s.initial_energy == pytest.approx(s.final_residual + s.total_energy, rel=1e-9)


def test_config_errors_surface():
    with pytest.raises(ConfigError):
        run_simulation(SimConfig(), max_rounds=-1)
    with pytest.raises(ConfigError):
        aggregate_runs(SimConfig(), runs=0)


def test_run_is_deterministic():
    a = run_simulation(SMALL, "leach", seed=4)
    b = run_simulation(SMALL, "leach", seed=4)
    assert a == b
    assert a != run_simulation(SMALL, "leach", seed=5)


def test_aggregate_single_run_matches_simulation():
    agg = aggregate_runs(SMALL, "mbehzad", runs=1)
    single = run_simulation(SMALL, "mbehzad")
    assert agg.series == single.series
    assert agg.mean_fdt == single.summary.fdt_round


def test_aggregate_of_identical_runs():
    # nothing ever crosses the threshold, so every seed yields the same series
    cfg = SimConfig(counts_per_region={"M1": 1}, p_drop=0.0, hard_threshold=500.0, max_rounds=50)
    agg = aggregate_runs(cfg, "direct", runs=5)
    assert [r.summary.seed for r in agg.runs] == [0, 1, 2, 3, 4]
    for run in agg.runs:
        assert agg.series == run.series


def test_mean_fdt_within_run_range():
    agg = aggregate_runs(SMALL, "leach", runs=5)
    fdts = [s.fdt_round for s in agg.summaries]
    assert min(fdts) <= agg.mean_fdt <= max(fdts)
    adts = [s.adt_round for s in agg.summaries]
    assert min(adts) <= agg.mean_adt <= max(adts)


def test_mean_series_pads_dead_runs():
    short = [RoundMetrics(1, 1, 2, 1, 1, 0.5, 0.25, 1e-7), RoundMetrics(2, 0, 1, 1, 0, 0.25, 0.0, 2e-7)]
    long = [RoundMetrics(i, 2, 2, 2, 0, 0.1, 1.0 - 0.1 * i, 1e-7) for i in range(1, 5)]
    mean = mean_series([short, long])
    assert len(mean) == 4
    assert mean[3] == RoundMetrics(4, 1.0, 1.0, 1.0, 0.0, 0.05, 0.3, 0.5e-7)
    assert mean_series([long]) == long


def test_mean_fdt_excludes_unreached(caplog):
    cfg = SimConfig(hard_threshold=500.0, max_rounds=5)
    with caplog.at_level(logging.WARNING):
        agg = aggregate_runs(cfg, "direct", runs=2)
        assert agg.mean_fdt is None
    assert "never reached FDT" in caplog.text


def test_parallel_matches_serial():
    serial = aggregate_runs(SMALL, "leach", runs=3)
    parallel = aggregate_runs(SMALL, "leach", runs=3, workers=3)
    assert serial.series == parallel.series
    assert serial.summaries == parallel.summaries


def test_csv_shapes_and_round_trip(tmp_path):
    assert (write_csv([], tmp_path / "e.csv")).read_text() == \
        "round,alive,sent,received,dropped,energy_consumed,residual,mean_delay\n"
    series = run_simulation(SMALL, "mbehzad", max_rounds=3).series
    path = write_csv(series, tmp_path / "s.csv")
    assert len(path.read_text().splitlines()) == 4
    assert read_csv(path) == series
    mean = aggregate_runs(SMALL, "mbehzad", runs=2, max_rounds=50).series
    assert read_csv(write_csv(mean, tmp_path / "m.csv")) == mean


def test_csv_unwritable(tmp_path):
    with pytest.raises(OSError):
        write_csv([], tmp_path / "missing-dir" / "x.csv")


def test_summary_csv(tmp_path):
    res = run_simulation(SimConfig(max_rounds=3), "direct")
    lines = write_summary_csv([res], tmp_path / "sum.csv").read_text().splitlines()
    assert lines[0].startswith("protocol,seed,rounds,fdt_round,adt_round")
    assert lines[1].startswith("direct,0,3,,,")


def test_plots_one_per_metric(tmp_path):
    series = run_simulation(SMALL, "mbehzad", max_rounds=40).series
    files = emit_plots({"mbehzad": series}, tmp_path)
    assert len(files) == 7 == len(METRICS)
    assert {f.name for f in tmp_path.iterdir()} == {f"{m}.svg" for m in METRICS}
    text = (tmp_path / "alive_nodes.svg").read_text()
    assert "Round" in text and "Alive nodes" in text


def test_plots_two_protocols_are_labelled(tmp_path):
    series = {p: run_simulation(SMALL, p, max_rounds=30).series for p in ("mbehzad", "leach")}
    emit_plots(series, tmp_path, n_nodes=SMALL.n_nodes)
    for m in METRICS:
        text = (tmp_path / f"{m}.svg").read_text()
        assert text.count("<!-- mbehzad -->") == 1 and text.count("<!-- leach -->") == 1


def test_plots_reject_empty_without_writing(tmp_path):
    with pytest.raises(ValueError):
        emit_plots({}, tmp_path / "a")
    with pytest.raises(ValueError):
        emit_plots({"mbehzad": [], "leach": [RoundMetrics(1, 1, 0, 0, 0, 0.0, 1.0, 0.0)]}, tmp_path / "b")
    assert not (tmp_path / "a").exists() and not (tmp_path / "b").exists()
