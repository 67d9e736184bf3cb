from __future__ import annotations

from pathlib import Path
from typing import Sequence

from jinja2 import Environment, FileSystemLoader, StrictUndefined

from py_app.errors import NoData

TEMPLATE_DIR = Path(__file__).resolve().parent / "templates"
TEMPLATE_NAME = "exploration_curves.svg.j2"

PALETTE = ["#2563eb", "#dc2626", "#16a34a", "#9333ea", "#ea580c", "#0891b2", "#4b5563"]

_MARGIN_LEFT = 64
_MARGIN_RIGHT = 170  # legend column
_MARGIN_TOP = 40
_MARGIN_BOTTOM = 52
_TICKS = 5

_env = Environment(
    loader=FileSystemLoader(str(TEMPLATE_DIR)),
    autoescape=True,
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=True,
    undefined=StrictUndefined,
)


def _fmt(value: float) -> str:
    """Fixed two-decimal coordinates keep the document byte-stable."""
    return f"{value:.2f}"


def _label(value: float) -> str:
    text = f"{value:.2f}".rstrip("0").rstrip(".")
    return text if text not in ("", "-0") else "0"


def render_plot(
    curves: Sequence[tuple[str, Sequence[float]]],
    *,
    title: str = "",
    x_label: str = "bin",
    y_label: str = "novel cells",
    bin_width: int | None = None,
    width: int = 720,
    height: int = 420,
) -> str:
    """Static SVG line chart: one polyline per labeled series, axes, ticks and a legend.

    With ``bin_width`` the x ticks are labeled in ticks of simulated time
    instead of bin indices. Empty series are left out.
    """
    drawn = [(label, list(values)) for label, values in curves if len(values) > 0]
    if not drawn:
        raise NoData("render_plot needs at least one non-empty series")

    left, right = _MARGIN_LEFT, width - _MARGIN_RIGHT
    top, bottom = _MARGIN_TOP, height - _MARGIN_BOTTOM

    x_max = max(len(values) for _, values in drawn) - 1
    y_max = max(max(values) for _, values in drawn)
    x_span = x_max if x_max > 0 else 1
    y_span = y_max if y_max > 0 else 1

    def sx(i: float) -> float:
        return left + (right - left) * i / x_span

    def sy(v: float) -> float:
        return bottom - (bottom - top) * v / y_span

    scale = bin_width or 1
    x_ticks = []
    for k in range(_TICKS):
        i = round(x_span * k / (_TICKS - 1))
        if x_ticks and x_ticks[-1]["index"] == i:
            continue
        x_ticks.append({"index": i, "pos": _fmt(sx(i)), "label": _label(i * scale)})
    y_ticks = [
        {"pos": _fmt(sy(y_span * k / (_TICKS - 1))), "label": _label(y_span * k / (_TICKS - 1))}
        for k in range(_TICKS)
    ]

    series = []
    for n, (label, values) in enumerate(drawn):
        points = " ".join(f"{_fmt(sx(i))},{_fmt(sy(v))}" for i, v in enumerate(values))
        series.append({
            "label": label,
            "color": PALETTE[n % len(PALETTE)],
            "points": points,
            "legend_y": top + 10 + 20 * n,
        })

    legend_x = right + 20
    return _env.get_template(TEMPLATE_NAME).render(
        width=width,
        height=height,
        title=title,
        x_label=x_label,
        y_label=y_label,
        plot={
            "left": left,
            "right": right,
            "top": top,
            "bottom": bottom,
            "center_x": (left + right) // 2,
            "center_y": (top + bottom) // 2,
            "bottom_tick": bottom + 5,
            "bottom_label": bottom + 20,
            "left_tick": left - 5,
            "left_label": left - 8,
            "x_title_y": height - 10,
        },
        x_ticks=x_ticks,
        y_ticks=y_ticks,
        series=series,
        legend={"x": legend_x, "swatch_end": legend_x + 24, "text_x": legend_x + 30},
    )
