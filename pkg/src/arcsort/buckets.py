"""Digit-count bucketing and the bucketed sort built on it.

Keys are classified by decimal digit count: bucket 0 collects every
non-positive value (zero included, by convention), bucket b >= 1 collects
the positive values with exactly b digits.  Because the classes cover
disjoint, increasing value ranges, every element of a lower bucket is
smaller than every element of a higher one, so sorting each bucket
independently and concatenating in bucket order sorts the whole input.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import chain
from typing import Iterable, Sequence

from . import _kernels
from .metrics import SortMetrics
from .sorts import enhanced_selection_sort

USE_COMPILED = _kernels.AVAILABLE and os.environ.get("ARCSORT_PURE") != "1"

if _kernels.AVAILABLE:
    import numpy as np

# int64 values have at most 19 decimal digits.
MAX_DIGITS = 19


def count_digits(x: int) -> int:
    """Return the bucket index for ``x``: 0 if x <= 0, else its digit count."""
    return len(str(x)) if x > 0 else 0


@dataclass
class BucketTable:
    """Elements grouped by digit class, in arrival order.

    ``buckets[b]`` holds the inputs whose bucket index is ``b``; ``k`` is
    the highest bucket index observed (0 for empty input), and
    ``len(buckets) == k + 1``.
    """

    buckets: list[list[int]] = field(default_factory=lambda: [[]])
    k: int = 0

    @property
    def occupancy(self) -> list[int]:
        return [len(b) for b in self.buckets]

    @property
    def total(self) -> int:
        return sum(len(b) for b in self.buckets)


def distribute(values: Iterable[int]) -> BucketTable:
    """Scatter values into digit-class buckets, preserving arrival order."""
    buckets: list[list[int]] = [[] for _ in range(MAX_DIGITS + 1)]
    k = 0
    for x in values:
        b = count_digits(x)
        buckets[b].append(x)
        if b > k:
            k = b
    return BucketTable(buckets[: k + 1], k)


def concatenate(table: BucketTable) -> list[int]:
    """Flatten the table in ascending bucket order."""
    return list(chain.from_iterable(table.buckets))


def arc_sort(data: Sequence[int], metrics: SortMetrics | None = None) -> list[int]:
    """Return the values sorted ascending; the input is left untouched.

    Distributes into digit-class buckets, sorts each bucket holding at
    least two elements with :func:`enhanced_selection_sort` (singleton and
    empty buckets are skipped outright), and concatenates in bucket order.
    Metrics accumulate across the per-bucket sorts, so total comparisons
    equal the sum of c(c-1)/2 over bucket occupancies c.
    """
    if metrics is None:
        metrics = SortMetrics()
    if USE_COMPILED:
        arr = np.array(data, dtype=np.int64)
        out, comparisons, swaps = _kernels.arc(arr)
        metrics.comparisons += int(comparisons)
        metrics.swaps += int(swaps)
        return out.tolist()
    table = distribute(data)
    for bucket in table.buckets:
        if len(bucket) > 1:
            enhanced_selection_sort(bucket, metrics)
    return concatenate(table)
