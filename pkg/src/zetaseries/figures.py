"""Sampled data for the two reference figures: log-sinc around 0 and the
log series around 1, each with its 1-, 2- and 3-term approximants."""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import zeta_series
from .errors import DomainError, UnknownIdError


@dataclass(frozen=True)
class PlotSeries:
    figure_id: str
    x_grid: list[float]
    exact: list[float]
    term_counts: list[int]
    # approximations[i][j]: term_counts[i] terms at x_grid[j]
    approximations: list[list[float]]
    errors: list[list[float]]

    def rows(self):
        for j, x in enumerate(self.x_grid):
            yield (
                x,
                self.exact[j],
                *(a[j] for a in self.approximations),
                *(e[j] for e in self.errors),
            )

    def header(self) -> list[str]:
        return (
            ["x", "exact"]
            + [f"approx_{n}" for n in self.term_counts]
            + [f"err_{n}" for n in self.term_counts]
        )


def _exact_log_sinc(x: float) -> float:
    if x == 0.0:
        return 0.0
    return math.log(math.sin(math.pi * x) / (math.pi * x))


def _check_log_sinc_range(lo: float, hi: float) -> None:
    if not (abs(lo) < 1.0 and abs(hi) < 1.0):
        raise DomainError(f"log_sinc figure range must lie inside (-1, 1), got {lo}:{hi}")


def _check_log_series_range(lo: float, hi: float) -> None:
    if not (lo > 0.0 and hi > 0.0 and math.isfinite(hi)):
        raise DomainError(f"log_series figure range must lie inside (0, inf), got {lo}:{hi}")


FIGURES = {
    "log_sinc": (zeta_series.log_sinc, _exact_log_sinc, _check_log_sinc_range),
    "log_series": (zeta_series.log_series, math.log, _check_log_series_range),
}


def grid(lo: float, hi: float, samples: int) -> list[float]:
    """Evenly spaced points; the weighted form hits 0 and 1/2 exactly on symmetric grids."""
    n = samples - 1
    return [(lo * (n - i) + hi * i) / n for i in range(samples)]


def plot_series(
    figure_id: str,
    lo: float,
    hi: float,
    samples: int,
    term_counts: list[int] | tuple[int, ...] = (1, 2, 3),
) -> PlotSeries:
    try:
        series, exact_fn, check_range = FIGURES[figure_id]
    except KeyError:
        raise UnknownIdError(f"unknown figure {figure_id!r}; known: {', '.join(FIGURES)}") from None
    if samples < 2:
        raise ValueError(f"samples must be >= 2, got {samples}")
    counts = list(term_counts)
    if not counts or any(n < 1 for n in counts) or any(b <= a for a, b in zip(counts, counts[1:])):
        raise ValueError(f"term counts must be positive and strictly increasing, got {counts}")
    check_range(lo, hi)
    xs = grid(lo, hi, samples)
    exact = [exact_fn(x) for x in xs]
    approx = [[series(x, n).value for x in xs] for n in counts]
    errors = [[a - e for a, e in zip(row, exact)] for row in approx]
    return PlotSeries(figure_id, xs, exact, counts, approx, errors)
