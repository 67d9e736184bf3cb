from __future__ import annotations

import csv
import io
import math
import re
from typing import Callable, Sequence

from py_app.curves import ExplorationCurve
from py_app.engine import MeanCurve, SweepRow
from py_app.errors import BadHeader, BadRow, InconsistentBinWidth

HEADER = ["bin", "t_start", "t_end", "novel_cells", "crossings"]

_INT_RE = re.compile(r"^[0-9]+$")
_REAL_RE = re.compile(r"^[0-9]+(\.[0-9]+)?$")


def _writer(buf: io.StringIO):
    return csv.writer(buf, lineterminator="\n")


def write_csv(curve: ExplorationCurve) -> str:
    buf = io.StringIO()
    writer = _writer(buf)
    writer.writerow(HEADER)
    for i, (novel, crossings) in enumerate(zip(curve.novel, curve.crossings)):
        t_start = i * curve.bin_width
        writer.writerow([i, t_start, t_start + curve.bin_width, novel, crossings])
    return buf.getvalue()


def write_mean_csv(mean: MeanCurve) -> str:
    """Same layout as ``write_csv`` with real-valued counts at fixed 6-decimal precision."""
    buf = io.StringIO()
    writer = _writer(buf)
    writer.writerow(HEADER)
    for i, (novel, crossings) in enumerate(zip(mean.novel, mean.crossings)):
        t_start = i * mean.bin_width
        writer.writerow([i, t_start, t_start + mean.bin_width, f"{novel:.6f}", f"{crossings:.6f}"])
    return buf.getvalue()


SUMMARY_HEADER = ["value", "auc", "peak_bin", "t50"]


def write_sweep_summary(rows: Sequence[SweepRow]) -> str:
    """One line per swept value; ``t50`` is blank when the mean curve explored nothing."""
    buf = io.StringIO()
    writer = _writer(buf)
    writer.writerow(SUMMARY_HEADER)
    for row in rows:
        writer.writerow([f"{row.value:g}", f"{row.auc:.6f}", row.peak_bin, "" if row.t50 is None else row.t50])
    return buf.getvalue()


def _parse_int(value: str, row: int, column: str) -> int:
    if not _INT_RE.match(value):
        raise BadRow(f"Row {row}: {column} must be a non-negative integer, got {value!r}", row=row, reason="non_integer")
    return int(value)


def _parse_real(value: str, row: int, column: str) -> float:
    if not _REAL_RE.match(value):
        raise BadRow(f"Row {row}: {column} must be a non-negative number, got {value!r}", row=row, reason="non_numeric")
    parsed = float(value)
    if not math.isfinite(parsed):
        raise BadRow(f"Row {row}: {column} is not finite", row=row, reason="non_numeric")
    return parsed


def _read_rows(
    text: str,
    parse_count: Callable[[str, int, str], float],
    default_bin_width: int,
) -> tuple[int, list[float], list[float]]:
    reader = csv.reader(io.StringIO(text, newline=""))
    header = next(reader, None)
    if header != HEADER:
        raise BadHeader(f"Expected header {','.join(HEADER)!r}, got {','.join(header or [])!r}")

    bin_width: int | None = None
    novel: list[float] = []
    crossings: list[float] = []
    for i, fields in enumerate(reader):
        row = i + 1
        if len(fields) != len(HEADER):
            raise BadRow(f"Row {row}: expected {len(HEADER)} fields, got {len(fields)}", row=row, reason="field_count")
        b = _parse_int(fields[0], row, "bin")
        t_start = _parse_int(fields[1], row, "t_start")
        t_end = _parse_int(fields[2], row, "t_end")
        n = parse_count(fields[3], row, "novel_cells")
        c = parse_count(fields[4], row, "crossings")

        if b != i:
            raise BadRow(f"Row {row}: expected bin {i}, got {b}", row=row, reason="gap")
        width = t_end - t_start
        if bin_width is None:
            if width < 1:
                raise InconsistentBinWidth(f"Row {row}: t_end must exceed t_start")
            bin_width = width
        if width != bin_width or t_start != b * bin_width:
            raise InconsistentBinWidth(f"Row {row}: bin spans [{t_start}, {t_end}), expected width {bin_width}")
        if n > c:
            raise BadRow(f"Row {row}: novel_cells {n} exceeds crossings {c}", row=row, reason="novel_gt_crossings")
        if c > bin_width:
            raise BadRow(f"Row {row}: crossings {c} exceeds bin width {bin_width}", row=row, reason="crossings_gt_width")
        novel.append(n)
        crossings.append(c)

    return (bin_width if bin_width is not None else default_bin_width), novel, crossings


def read_csv(text: str, *, default_bin_width: int = 100) -> ExplorationCurve:
    """Inverse of ``write_csv``. A header-only file has no rows to infer the bin width from."""
    bin_width, novel, crossings = _read_rows(text, _parse_int, default_bin_width)
    return ExplorationCurve(bin_width=bin_width, novel=novel, crossings=crossings)


def read_mean_csv(text: str, *, default_bin_width: int = 100) -> MeanCurve:
    bin_width, novel, crossings = _read_rows(text, _parse_real, default_bin_width)
    return MeanCurve(bin_width=bin_width, novel=tuple(novel), crossings=tuple(crossings))


def read_any_csv(text: str) -> ExplorationCurve | MeanCurve:
    """Count CSV when every value is an integer, otherwise a mean-curve CSV."""
    try:
        return read_csv(text)
    except BadRow as exc:
        if exc.reason != "non_integer":
            raise
    return read_mean_csv(text)
