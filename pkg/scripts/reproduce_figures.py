from __future__ import annotations

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT))

from py_app.config_loader import load_config  # noqa: E402
from py_app.csv_io import write_mean_csv, write_sweep_summary  # noqa: E402
from py_app.curves import shift_stats  # noqa: E402
from py_app.engine import run_replicates, sweep  # noqa: E402
from py_app.logger import get_logger  # noqa: E402
from py_app.plot import render_plot  # noqa: E402
from py_app.settings import Settings  # noqa: E402
from py_app.utils import dump_json_compact, write_text  # noqa: E402

CONFIG_DIR = ROOT / "config"
OUT_DIR = ROOT / "docs" / "figures"

POPULATIONS = {
    "Fish Lake (low fear)": "fish-lake.json",
    "Lake Opinicon (high fear)": "lake-opinicon.json",
}
FEAR_LADDER = [0.2, 0.5, 0.8, 0.95]


def build_population_figures(settings: Settings, replicates: int) -> None:
    means = {}
    for label, name in POPULATIONS.items():
        config = load_config(CONFIG_DIR / name)
        seeds = [config.seed + i for i in range(replicates)]
        mean, _ = run_replicates(config, seeds, workers=settings.workers)
        means[label] = mean
        write_text(OUT_DIR / f"{Path(name).stem}-mean.csv", write_mean_csv(mean))

    bin_width = next(iter(means.values())).bin_width
    for series, y_label in (("novel", "novel cells per bin"), ("crossings", "grid lines crossed per bin")):
        svg = render_plot(
            [(label, getattr(mean, series)) for label, mean in means.items()],
            title="Two populations, one fear parameter apart",
            x_label="time (ticks)",
            y_label=y_label,
            bin_width=bin_width,
            width=settings.plot_width,
            height=settings.plot_height,
        )
        write_text(OUT_DIR / f"populations-{series}.svg", svg)

    low, high = means.values()
    write_text(OUT_DIR / "populations-shift.json", dump_json_compact(shift_stats(low, high).as_dict()) + "\n")


def build_fear_ladder(settings: Settings, replicates: int) -> None:
    base = load_config(CONFIG_DIR / "default.json")
    seeds = [base.seed + i for i in range(replicates)]
    rows = sweep(base, "fear_initial", FEAR_LADDER, seeds, workers=settings.workers)
    svg = render_plot(
        [(f"fear_initial={row.value:g}", row.mean.novel) for row in rows],
        title="Higher initial fear: later, flatter exploration",
        x_label="time (ticks)",
        y_label="novel cells per bin",
        bin_width=base.bin_width,
        width=settings.plot_width,
        height=settings.plot_height,
    )
    write_text(OUT_DIR / "fear-ladder.svg", svg)

    write_text(OUT_DIR / "fear-ladder-summary.csv", write_sweep_summary(rows))


def main() -> None:
    settings = Settings()
    logger = get_logger(level=settings.log_level)
    replicates = settings.default_replicates
    build_population_figures(settings, replicates)
    build_fear_ladder(settings, replicates)
    logger.info("Figures written", extra={"fields": {"out": str(OUT_DIR), "replicates": replicates}})


if __name__ == "__main__":
    main()
