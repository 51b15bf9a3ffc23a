"""Integer sorting by digit-count buckets, with instrumented baselines.

The core sort distributes keys into buckets by decimal digit count
(bucket 0 takes all non-positive values), sorts each bucket with an
enhanced selection sort that swaps the maximum into place at most once
per pass, and concatenates the buckets.  Alongside it live instrumented
classic baselines (selection, insertion, bubble), seeded dataset
generators, and a timing harness that emits CSV reports and plot data.
"""

from .bench import (
    ALGORITHMS,
    CSV_HEADER,
    BenchmarkError,
    BenchmarkReport,
    ReportMeta,
    SummaryRow,
    TrialResult,
    emit_plot_data,
    report_from_csv,
    report_to_csv,
    run_benchmark,
    summarize,
)
from .buckets import BucketTable, MAX_DIGITS, arc_sort, concatenate, count_digits, distribute
from .datagen import DISTRIBUTIONS, DatasetError, DatasetSpec, generate
from .metrics import SortMetrics
from .sorts import bubble_sort, enhanced_selection_sort, insertion_sort, selection_sort

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS",
    "CSV_HEADER",
    "BenchmarkError",
    "BenchmarkReport",
    "BucketTable",
    "DISTRIBUTIONS",
    "DatasetError",
    "DatasetSpec",
    "MAX_DIGITS",
    "ReportMeta",
    "SortMetrics",
    "SummaryRow",
    "TrialResult",
    "arc_sort",
    "bubble_sort",
    "concatenate",
    "count_digits",
    "distribute",
    "emit_plot_data",
    "enhanced_selection_sort",
    "generate",
    "insertion_sort",
    "report_from_csv",
    "report_to_csv",
    "run_benchmark",
    "selection_sort",
    "summarize",
]
