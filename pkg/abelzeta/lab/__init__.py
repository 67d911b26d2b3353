from .irreducibles import irreducible_count_table
from .oracle import (
    OracleMismatch,
    OracleOutcome,
    OracleResult,
    check_cover,
    draw_covers,
    run_oracle,
)
from .pipeline import CoverAnalysis, analyze, check_prediction, count_places_parallel
from .places import places_report
from .plotting import plot_ratio_convergence
from .sweeps import SweepPlan, SweepResult, SweepRow, row_columns, run_sweep

__all__ = [
    CoverAnalysis,
    OracleMismatch,
    OracleOutcome,
    OracleResult,
    SweepPlan,
    SweepResult,
    SweepRow,
    analyze,
    check_cover,
    check_prediction,
    count_places_parallel,
    draw_covers,
    irreducible_count_table,
    places_report,
    plot_ratio_convergence,
    row_columns,
    run_oracle,
    run_sweep,
]
