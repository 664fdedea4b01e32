from .bench import BenchParams, BenchRow, run_bench, spec_for_edges
from .bench_recorder import COLUMNS, BenchRecorder, read_rows
from .verify import (
    Mismatch,
    Verdict,
    VerifyParams,
    diff_report,
    threads_from_env,
    verify_instance,
)

__all__ = [
    "BenchParams",
    "BenchRecorder",
    "BenchRow",
    "COLUMNS",
    "Mismatch",
    "Verdict",
    "VerifyParams",
    "diff_report",
    "read_rows",
    "run_bench",
    "spec_for_edges",
    "threads_from_env",
    "verify_instance",
]
