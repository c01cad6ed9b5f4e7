from .driver import (
    AggregateResult,
    RoundMetrics,
    SimulationResult,
    SummaryStats,
    aggregate_runs,
    mean_series,
    run_simulation,
)
from .io import SERIES_COLUMNS, read_csv, write_csv, write_summary_csv
from .plots import METRICS, emit_plots
