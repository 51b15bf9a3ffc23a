"""Instrumented in-place ascending sorts over signed 64-bit integers.

All four sorts mutate the sequence they are given, report their work
through a :class:`~arcsort.metrics.SortMetrics` accumulator, and are
deterministic: the same input always yields the same output and the same
counts.  None of them is stable, which is unobservable on plain integers.

Each sort has a pure-Python implementation (the reference) and, when
numba is importable, a compiled twin in ``_kernels`` that it dispatches
to.  Set ``ARCSORT_PURE=1`` to force the pure path.
"""

from __future__ import annotations

import os
from typing import MutableSequence

from . import _kernels
from .metrics import SortMetrics

USE_COMPILED = _kernels.AVAILABLE and os.environ.get("ARCSORT_PURE") != "1"

if _kernels.AVAILABLE:
    import numpy as np


def _run_kernel(kernel, data: MutableSequence[int]) -> tuple[int, int]:
    arr = np.array(data, dtype=np.int64)
    a, b = kernel(arr)
    data[:] = arr.tolist()
    return int(a), int(b)


def enhanced_selection_sort(data: MutableSequence[int], metrics: SortMetrics | None = None) -> None:
    """Sort ascending by repeatedly swapping the maximum to the end.

    Each pass scans the unsorted prefix left to right, promoting the
    candidate on `>=` so the LAST occurrence of the maximum wins, then
    swaps it into the prefix's final slot only when it is not already
    there.  Exactly n(n-1)/2 comparisons and at most n-1 swaps; on
    duplicates the `>=` rule can swap a pair of equal values, which is
    kept so swap counts stay reproducible.
    """
    if metrics is None:
        metrics = SortMetrics()
    n = len(data)
    if n < 2:
        return
    if USE_COMPILED:
        comparisons, swaps = _run_kernel(_kernels.enhanced_selection, data)
        metrics.comparisons += comparisons
        metrics.swaps += swaps
        return
    comparisons = 0
    swaps = 0
    # Iterative form of a tail-recursive procedure: shrink the prefix by
    # one after each pass instead of recursing (depth n would overflow).
    for size in range(n, 1, -1):
        last = size - 1
        best = last
        best_val = data[last]
        for i in range(last):
            v = data[i]
            if v >= best_val:
                best_val = v
                best = i
        comparisons += size - 1
        if best != last:
            data[best], data[last] = data[last], best_val
            swaps += 1
    metrics.comparisons += comparisons
    metrics.swaps += swaps


def selection_sort(data: MutableSequence[int], metrics: SortMetrics | None = None) -> None:
    """Classic minimum-selection sort: one swap per pass, no early exit."""
    if metrics is None:
        metrics = SortMetrics()
    n = len(data)
    if n < 2:
        return
    if USE_COMPILED:
        comparisons, swaps = _run_kernel(_kernels.selection, data)
        metrics.comparisons += comparisons
        metrics.swaps += swaps
        return
    comparisons = 0
    swaps = 0
    for i in range(n - 1):
        best = i
        best_val = data[i]
        for j in range(i + 1, n):
            v = data[j]
            if v < best_val:
                best_val = v
                best = j
        comparisons += n - 1 - i
        if best != i:
            data[best], data[i] = data[i], best_val
            swaps += 1
    metrics.comparisons += comparisons
    metrics.swaps += swaps


def insertion_sort(data: MutableSequence[int], metrics: SortMetrics | None = None) -> None:
    """Shift-based insertion sort, scanning left while strictly greater.

    Comparisons count every executed ``data[j] > key`` test; writes count
    the shift stores only, not the final key placement.
    """
    if metrics is None:
        metrics = SortMetrics()
    n = len(data)
    if n < 2:
        return
    if USE_COMPILED:
        comparisons, writes = _run_kernel(_kernels.insertion, data)
        metrics.comparisons += comparisons
        metrics.writes += writes
        return
    comparisons = 0
    writes = 0
    for i in range(1, n):
        key = data[i]
        j = i - 1
        while j >= 0 and data[j] > key:
            data[j + 1] = data[j]
            writes += 1
            comparisons += 1
            j -= 1
        if j >= 0:
            comparisons += 1  # the failed data[j] > key test that ended the scan
        data[j + 1] = key
    metrics.comparisons += comparisons
    metrics.writes += writes


def bubble_sort(data: MutableSequence[int], metrics: SortMetrics | None = None) -> None:
    """Adjacent-swap passes, stopping after the first pass with no swap."""
    if metrics is None:
        metrics = SortMetrics()
    n = len(data)
    if n < 2:
        return
    if USE_COMPILED:
        comparisons, swaps = _run_kernel(_kernels.bubble, data)
        metrics.comparisons += comparisons
        metrics.swaps += swaps
        return
    comparisons = 0
    swaps = 0
    for i in range(n - 1):
        swapped = False
        limit = n - 1 - i
        for j in range(limit):
            if data[j] > data[j + 1]:
                data[j], data[j + 1] = data[j + 1], data[j]
                swaps += 1
                swapped = True
        comparisons += limit
        if not swapped:
            break
    metrics.comparisons += comparisons
    metrics.swaps += swaps
