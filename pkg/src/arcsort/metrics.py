"""Operation counters shared by all sorts."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass
class SortMetrics:
    """Running totals of element-level work done by one or more sort calls.

    comparisons counts element-to-element order tests, swaps counts
    two-element exchanges, and writes counts single element stores
    (insertion sort's shifts).  Counters accumulate across calls; use
    ``reset()`` to start a fresh measurement.
    """

    comparisons: int = 0
    swaps: int = 0
    writes: int = 0

    def reset(self) -> None:
        self.comparisons = 0
        self.swaps = 0
        self.writes = 0

    def copy(self) -> "SortMetrics":
        return SortMetrics(self.comparisons, self.swaps, self.writes)
