"""Command-line front end: ``sort``, ``gen``, and ``bench`` subcommands.

Exit codes: 0 success, 2 unreadable input file, 3 unparseable or
out-of-range integer (the diagnostic names the line), 4 invalid dataset
spec, 5 unknown benchmark algorithm.  Output files are written atomically
and stdout is only written after the whole input has parsed, so error
paths never leave partial output behind.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
from typing import Sequence

from .bench import (
    ALGORITHMS,
    BenchmarkError,
    emit_plot_data,
    report_to_csv,
    run_benchmark,
    summarize,
)
from .datagen import (
    DEFAULT_VALUE_HI,
    DEFAULT_VALUE_LO,
    INT64_MAX,
    INT64_MIN,
    DISTRIBUTIONS,
    DatasetError,
    DatasetSpec,
    generate,
)
from .metrics import SortMetrics

EXIT_OK = 0
EXIT_UNREADABLE = 2
EXIT_BAD_INT = 3
EXIT_BAD_SPEC = 4
EXIT_BAD_ALGO = 5

DEFAULT_SIZES = "1000,5000,10000,20000"


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def read_integers(path: str) -> list[int]:
    """Parse newline-separated signed decimals from a file or stdin (``-``).

    Blank lines are skipped.  A token that is not an integer, or one
    outside the signed 64-bit range, aborts with the offending line number
    (overflow must error, not clamp: silent saturation would corrupt
    benchmark datasets).
    """
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, "r", encoding="ascii") as fh:
                text = fh.read()
        except OSError as exc:
            raise CliError(EXIT_UNREADABLE, f"cannot read {path!r}: {exc}") from exc
    values = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        token = raw.strip()
        if not token:
            continue
        try:
            value = int(token)
        except ValueError:
            raise CliError(
                EXIT_BAD_INT, f"line {lineno}: {token!r} is not an integer"
            ) from None
        if not INT64_MIN <= value <= INT64_MAX:
            raise CliError(
                EXIT_BAD_INT, f"line {lineno}: {value} is outside the 64-bit range"
            )
        values.append(value)
    return values


def write_text(path: str, text: str) -> None:
    """Write to ``path`` atomically (temp file + rename), or to stdout for ``-``."""
    if path == "-":
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".arcsort-")
    try:
        with os.fdopen(fd, "w", encoding="ascii") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def _csv_list(text: str) -> list[str]:
    return [item.strip() for item in text.split(",") if item.strip()]


def cmd_sort(args: argparse.Namespace) -> int:
    values = read_integers(args.input)
    metrics = SortMetrics()
    result = ALGORITHMS[args.algo](values, metrics)
    sys.stdout.write("".join(f"{v}\n" for v in result))
    if args.metrics:
        print(
            f"comparisons={metrics.comparisons} swaps={metrics.swaps} writes={metrics.writes}",
            file=sys.stderr,
        )
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    spec = DatasetSpec(
        distribution=args.dist,
        n=args.n,
        seed=args.seed,
        value_lo=args.min,
        value_hi=args.max,
        digit_class=args.digit_class,
    )
    try:
        values = generate(spec)
    except DatasetError as exc:
        raise CliError(EXIT_BAD_SPEC, str(exc)) from exc
    write_text(args.output, "".join(f"{v}\n" for v in values))
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    algos = _csv_list(args.algos)
    unknown = [a for a in algos if a not in ALGORITHMS]
    if unknown:
        raise CliError(
            EXIT_BAD_ALGO,
            f"unknown algorithm(s): {', '.join(unknown)}; valid: {', '.join(ALGORITHMS)}",
        )
    try:
        sizes = [int(s) for s in _csv_list(args.sizes)]
    except ValueError as exc:
        raise CliError(EXIT_BAD_SPEC, f"bad --sizes value: {exc}") from None
    template = DatasetSpec(
        distribution=args.dist,
        n=0,
        seed=args.seed,
        value_lo=args.min,
        value_hi=args.max,
    )
    try:
        report = run_benchmark(algos, sizes, template, trials=args.trials, warmup=args.warmup)
    except DatasetError as exc:
        raise CliError(EXIT_BAD_SPEC, str(exc)) from exc
    write_text(args.output, report_to_csv(report))
    summary = summarize(report)
    if args.plot:
        write_text(args.plot, emit_plot_data(summary))
    for row in summary:
        print(
            f"{row.algorithm:>18s}  n={row.n:<8d} median={row.median_ns / 1e6:10.3f} ms  "
            f"mean={row.mean_ns / 1e6:10.3f} ms  comparisons={row.mean_comparisons:.0f}"
        )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arcsort",
        description="Sort integers by digit-count bucketing, generate datasets, run benchmarks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sort = sub.add_parser("sort", help="sort newline-separated integers from a file or stdin")
    p_sort.add_argument("--algo", required=True, choices=sorted(ALGORITHMS))
    p_sort.add_argument("--metrics", action="store_true", help="print operation counts to stderr")
    p_sort.add_argument("input", metavar="file", help="input path, or - for stdin")
    p_sort.set_defaults(func=cmd_sort)

    p_gen = sub.add_parser("gen", help="generate a seeded dataset")
    p_gen.add_argument("--dist", required=True, help=f"one of: {', '.join(DISTRIBUTIONS)}")
    p_gen.add_argument("--n", required=True, type=int)
    p_gen.add_argument("--seed", required=True, type=int)
    p_gen.add_argument("--min", type=int, default=DEFAULT_VALUE_LO)
    p_gen.add_argument("--max", type=int, default=DEFAULT_VALUE_HI)
    p_gen.add_argument("--digit-class", type=int, default=None)
    p_gen.add_argument("-o", "--output", required=True, help="output path, or - for stdout")
    p_gen.set_defaults(func=cmd_gen)

    p_bench = sub.add_parser("bench", help="time the sorts over seeded datasets")
    p_bench.add_argument("--algos", default=",".join(ALGORITHMS))
    p_bench.add_argument("--sizes", default=DEFAULT_SIZES)
    p_bench.add_argument("--dist", default="uniform")
    p_bench.add_argument("--trials", type=int, default=5)
    p_bench.add_argument("--warmup", type=int, default=2)
    p_bench.add_argument("--seed", type=int, default=42)
    p_bench.add_argument("--min", type=int, default=DEFAULT_VALUE_LO)
    p_bench.add_argument("--max", type=int, default=DEFAULT_VALUE_HI)
    p_bench.add_argument("-o", "--output", required=True, help="CSV path, or - for stdout")
    p_bench.add_argument("--plot", default=None, help="also write tab-separated plot data here")
    p_bench.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"arcsort: error: {exc}", file=sys.stderr)
        return exc.code
    except BenchmarkError as exc:
        print(f"arcsort: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
