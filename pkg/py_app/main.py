#!/usr/bin/env python3
"""Command-line front end.

    python -m py_app.main run     --config F [--seed N] --out F.csv [--trace F.jsonl]
    python -m py_app.main sweep   --config F --param P --values v1,v2 [--replicates K] --out DIR [--plot]
    python -m py_app.main fit     --config F --target F.csv --free p1[,p2] [--replicates K] [--grid-step S]
    python -m py_app.main compare --a F.csv --b F.csv
    python -m py_app.main plot    --in F.csv[,F.csv...] --out F.svg [--series novel|crossings] [--title T]

Exit codes: 0 success, 1 usage error, 2 config/validation error, 3 I/O error.
Results go to files or stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
from pathlib import Path
from typing import Any, Sequence

from pydantic import ValidationError

from py_app.config_loader import load_config
from py_app.csv_io import read_any_csv, write_csv, write_mean_csv, write_sweep_summary
from py_app.curves import shift_stats
from py_app.engine import SWEEP_PARAMS, SimConfig, TickRecord, run_sim, sweep
from py_app.errors import (
    ConfigFileError,
    ConfigInvalid,
    CsvFormatError,
    CurveError,
    FitError,
    PlotError,
    SweepError,
    UsageError,
)
from py_app.fit import FIT_PARAMS, FitSpec, fit_params
from py_app.logger import get_logger
from py_app.plot import render_plot
from py_app.settings import Settings
from py_app.utils import dump_json_compact, parse_csv_list, write_text

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_IO = 3

_VALIDATION_ERRORS = (ConfigFileError, ConfigInvalid, SweepError, FitError, CurveError, CsvFormatError, PlotError)


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="explorer", description="Fear/exploration drive simulator.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="Simulate one run and write its exploration curve")
    p_run.add_argument("--config", required=True, type=Path)
    p_run.add_argument("--seed", type=int)
    p_run.add_argument("--out", required=True, type=Path)
    p_run.add_argument("--trace", type=Path, help="Also write one JSON line per tick")

    p_sweep = sub.add_parser("sweep", help="Replicate-mean curves across values of one parameter")
    p_sweep.add_argument("--config", required=True, type=Path)
    p_sweep.add_argument("--param", required=True, help=f"One of: {', '.join(SWEEP_PARAMS)}")
    p_sweep.add_argument("--values", required=True, help="Comma-separated values")
    p_sweep.add_argument("--replicates", type=int)
    p_sweep.add_argument("--out", required=True, type=Path, help="Output directory")
    p_sweep.add_argument("--plot", action="store_true", help="Also write sweep.svg")

    p_fit = sub.add_parser("fit", help="Recover fear parameters from a target curve")
    p_fit.add_argument("--config", required=True, type=Path)
    p_fit.add_argument("--target", required=True, type=Path)
    p_fit.add_argument("--free", required=True, help=f"Comma-separated subset of: {', '.join(FIT_PARAMS)}")
    p_fit.add_argument("--replicates", type=int)
    p_fit.add_argument("--grid-step", type=float, help="Coarse grid spacing over [0, 1]")

    p_compare = sub.add_parser("compare", help="Shift statistics of curve b relative to curve a")
    p_compare.add_argument("--a", required=True, type=Path)
    p_compare.add_argument("--b", required=True, type=Path)

    p_plot = sub.add_parser("plot", help="Render curves as an SVG line chart")
    p_plot.add_argument("--in", dest="inputs", required=True, help="Comma-separated CSV files")
    p_plot.add_argument("--out", required=True, type=Path)
    p_plot.add_argument("--series", choices=["novel", "crossings"], default="novel")
    p_plot.add_argument("--title", default="")

    return parser


def _replicate_seeds(config: SimConfig, count: int | None, settings: Settings) -> list[int]:
    count = settings.default_replicates if count is None else count
    if count < 1:
        raise UsageError("--replicates must be at least 1")
    return [(config.seed + i) % 2**64 for i in range(count)]


def _value_label(value: float) -> str:
    return f"{value:g}"


def _read_curve(path: Path):
    return read_any_csv(path.read_text(encoding="utf-8"))


def cmd_run(args: argparse.Namespace, settings: Settings, logger) -> int:
    config = load_config(args.config)
    if args.seed is not None:
        if not 0 <= args.seed < 2**64:
            raise UsageError("--seed must be a 64-bit unsigned integer")
        config = dataclasses.replace(config, seed=args.seed)

    if args.trace is not None:
        args.trace.parent.mkdir(parents=True, exist_ok=True)
        with args.trace.open("w", encoding="utf-8", newline="") as fh:
            def write_tick(rec: TickRecord) -> None:
                fh.write(dump_json_compact(rec._asdict()) + "\n")

            result = run_sim(config, on_tick=write_tick)
    else:
        result = run_sim(config)

    write_text(args.out, write_csv(result.curve))
    logger.info(
        "Run complete",
        extra={"fields": {"completed": result.completed, "ticks_used": result.ticks_used,
                          "novel_total": sum(result.curve.novel), "out": str(args.out)}},
    )
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace, settings: Settings, logger) -> int:
    config = load_config(args.config)
    try:
        values = [float(v) for v in parse_csv_list(args.values)]
    except ValueError:
        raise UsageError(f"--values must be comma-separated numbers, got {args.values!r}") from None
    seeds = _replicate_seeds(config, args.replicates, settings)

    rows = sweep(config, args.param, values, seeds, workers=settings.workers)

    for row in rows:
        write_text(args.out / f"{args.param}_{_value_label(row.value)}.csv", write_mean_csv(row.mean))
    write_text(args.out / "summary.csv", write_sweep_summary(rows))

    if args.plot:
        svg = render_plot(
            [(f"{args.param}={_value_label(r.value)}", r.mean.novel) for r in rows],
            title=f"Mean novel cells per bin across {args.param}",
            x_label="time (ticks)",
            y_label="novel cells per bin",
            bin_width=config.bin_width,
            width=settings.plot_width,
            height=settings.plot_height,
        )
        write_text(args.out / "sweep.svg", svg)
    return EXIT_OK


def cmd_fit(args: argparse.Namespace, settings: Settings, logger) -> int:
    config = load_config(args.config)
    target = _read_curve(args.target)
    free = tuple(parse_csv_list(args.free))
    step = settings.fit_coarse_step if args.grid_step is None else args.grid_step
    if not 0.0 < step <= 1.0:
        raise UsageError("--grid-step must be in (0, 1]")
    n = int(round(1.0 / step))
    coarse = tuple(min(1.0, round(i * step, 10)) for i in range(n + 1))

    spec = FitSpec(
        base=config,
        free=free,
        seeds=tuple(_replicate_seeds(config, args.replicates, settings)),
        grid={p: coarse for p in free},
        workers=settings.workers,
    )
    result = fit_params(spec, target)
    sys.stdout.write(dump_json_compact(result.as_dict()) + "\n")
    return EXIT_OK


def cmd_compare(args: argparse.Namespace, settings: Settings, logger) -> int:
    stats = shift_stats(_read_curve(args.a), _read_curve(args.b))
    sys.stdout.write(dump_json_compact(stats.as_dict()) + "\n")
    return EXIT_OK


def cmd_plot(args: argparse.Namespace, settings: Settings, logger) -> int:
    paths = [Path(p) for p in parse_csv_list(args.inputs)]
    if not paths:
        raise UsageError("--in needs at least one CSV file")
    curves = [(p, _read_curve(p)) for p in paths]
    widths = {c.bin_width for _, c in curves}
    svg = render_plot(
        [(p.stem, getattr(c, args.series)) for p, c in curves],
        title=args.title,
        x_label="time (ticks)" if len(widths) == 1 else "bin",
        y_label="novel cells per bin" if args.series == "novel" else "grid lines crossed per bin",
        bin_width=widths.pop() if len(widths) == 1 else None,
        width=settings.plot_width,
        height=settings.plot_height,
    )
    write_text(args.out, svg)
    return EXIT_OK


_COMMANDS: dict[str, Any] = {
    "run": cmd_run,
    "sweep": cmd_sweep,
    "fit": cmd_fit,
    "compare": cmd_compare,
    "plot": cmd_plot,
}


def main(argv: Sequence[str] | None = None) -> int:
    try:
        settings = Settings()
    except ValidationError as exc:
        sys.stderr.write(f"Invalid environment settings: {exc}\n")
        return EXIT_INVALID
    logger = get_logger(level=settings.log_level)
    parser = build_parser()

    try:
        args = parser.parse_args(list(sys.argv[1:] if argv is None else argv))
        return _COMMANDS[args.command](args, settings, logger)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except UsageError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except _VALIDATION_ERRORS as exc:
        logger.error("Invalid input", extra={"fields": {"error": str(exc), "type": type(exc).__name__}})
        return EXIT_INVALID
    except OSError as exc:
        logger.error("I/O failure", extra={"fields": {"error": str(exc), "type": type(exc).__name__}})
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
