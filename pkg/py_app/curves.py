"""Exploration curves and the metrics used to compare them.

All shift statistics are taken on the novel-cell series: for a completed run
its total equals the arena size, which makes area comparisons exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Protocol, Sequence

import numpy as np

from py_app.errors import BadFraction, BadWindow, BinWidthMismatch, EmptySeries, ZeroTotal

Number = int | float


class CurveLike(Protocol):
    bin_width: int
    novel: Sequence[Number]


@dataclass(frozen=True)
class ExplorationCurve:
    bin_width: int
    novel: tuple[int, ...] = ()
    crossings: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "novel", tuple(int(v) for v in self.novel))
        object.__setattr__(self, "crossings", tuple(int(v) for v in self.crossings))
        if len(self.novel) != len(self.crossings):
            raise ValueError(
                f"novel and crossings differ in length ({len(self.novel)} != {len(self.crossings)})"
            )

    def __len__(self) -> int:
        return len(self.novel)


@dataclass(frozen=True)
class ShiftStats:
    delta_t50: int
    delta_peak: int
    auc_ratio: float

    def as_dict(self) -> dict[str, Number]:
        return {"delta_t50": self.delta_t50, "delta_peak": self.delta_peak, "auc_ratio": self.auc_ratio}


def auc(series: Sequence[Number]) -> Number:
    return sum(series)


def peak_bin(series: Sequence[Number]) -> tuple[int, Number]:
    if len(series) == 0:
        raise EmptySeries("peak_bin needs a non-empty series")
    idx = int(np.argmax(np.asarray(series)))
    return idx, series[idx]


def time_to_fraction(series: Sequence[Number], q: float) -> int:
    """First bin at which the running total reaches ``q`` of the series total."""
    if not 0.0 < q <= 1.0:
        raise BadFraction(f"fraction must be in (0, 1], got {q}")
    cum = np.cumsum(np.asarray(series, dtype=float))
    if len(cum) == 0 or cum[-1] <= 0:
        raise ZeroTotal("series total is zero")
    idx = int(np.searchsorted(cum, q * cum[-1], side="left"))
    return min(idx, len(cum) - 1)


def smooth(series: Sequence[Number], window: int) -> list[float]:
    """Centered moving average; edge bins average over the part of the window that exists."""
    if window < 1 or window % 2 == 0:
        raise BadWindow(f"window must be an odd integer >= 1, got {window}")
    n = len(series)
    if n == 0:
        return []
    half = window // 2
    cum = np.concatenate(([0.0], np.cumsum(np.asarray(series, dtype=float))))
    idx = np.arange(n)
    lo = np.maximum(idx - half, 0)
    hi = np.minimum(idx + half + 1, n)
    return ((cum[hi] - cum[lo]) / (hi - lo)).tolist()


def is_unimodal(series: Sequence[Number], epsilon: float = 0.0) -> bool:
    """True if the series rises then falls, ignoring wobble up to ``epsilon``."""
    values = np.asarray(series, dtype=float)
    if len(values) < 3:
        return True
    diffs = np.diff(values)
    # The longest admissible rising prefix is the best split point.
    drops = np.nonzero(diffs < -epsilon)[0]
    if len(drops) == 0:
        return True
    return bool(np.all(diffs[drops[0]:] <= epsilon))


def shift_stats(a: CurveLike, b: CurveLike) -> ShiftStats:
    if a.bin_width != b.bin_width:
        raise BinWidthMismatch(f"bin widths differ: {a.bin_width} vs {b.bin_width}")
    total_a, total_b = auc(a.novel), auc(b.novel)
    if total_a <= 0 or total_b <= 0:
        raise ZeroTotal("both curves need a positive novel-cell total")
    return ShiftStats(
        delta_t50=time_to_fraction(b.novel, 0.5) - time_to_fraction(a.novel, 0.5),
        delta_peak=peak_bin(b.novel)[0] - peak_bin(a.novel)[0],
        auc_ratio=float(total_b) / float(total_a),
    )


def truncate_trailing_zeros(series: Sequence[Number]) -> list[Number]:
    end = len(series)
    while end > 0 and series[end - 1] == 0:
        end -= 1
    return list(series[:end])


def rebin(curve: ExplorationCurve, factor: int) -> ExplorationCurve:
    """Merge every ``factor`` consecutive bins; a partial last group is kept."""
    if factor < 1:
        raise ValueError(f"rebin factor must be >= 1, got {factor}")
    return ExplorationCurve(
        bin_width=curve.bin_width * factor,
        novel=_group_sums(curve.novel, factor),
        crossings=_group_sums(curve.crossings, factor),
    )


def _group_sums(values: Sequence[int], factor: int) -> tuple[int, ...]:
    return tuple(sum(values[i:i + factor]) for i in range(0, len(values), factor))
