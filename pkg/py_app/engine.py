from __future__ import annotations

import dataclasses
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Sequence

import numpy as np

from py_app.agent import AgentParams, PolicyMode, new_state, step
from py_app.curves import ExplorationCurve, auc, peak_bin, time_to_fraction
from py_app.errors import ConfigInvalid, EmptyValues, UnknownParam, ValueOutOfRange
from py_app.gridworld import GridWorld, new_grid
from py_app.logger import get_logger

SWEEP_PARAMS = ("fear_initial", "fear_decay", "w_explore", "w_fear")

logger = get_logger()


@dataclass(frozen=True)
class SimConfig:
    world: GridWorld = field(default_factory=lambda: new_grid(20, 20, (0, 0, 4, 4), (1, 1)))
    agent: AgentParams = field(default_factory=AgentParams)
    bin_width: int = 100
    max_ticks: int = 200_000
    seed: int = 42

    def __post_init__(self) -> None:
        if self.bin_width < 1:
            raise ConfigInvalid(f"bin_width must be >= 1, got {self.bin_width}", field="bin_width")
        if self.max_ticks < 0:
            raise ConfigInvalid(f"max_ticks must be >= 0, got {self.max_ticks}", field="max_ticks")
        if not 0 <= self.seed < 2**64:
            raise ConfigInvalid(f"seed must be a 64-bit unsigned integer, got {self.seed}", field="seed")

    def with_agent(self, **changes) -> "SimConfig":
        return dataclasses.replace(self, agent=dataclasses.replace(self.agent, **changes))


@dataclass(frozen=True)
class SimResult:
    curve: ExplorationCurve
    completed: bool
    ticks_used: int
    final_fear: float


@dataclass(frozen=True)
class MeanCurve:
    bin_width: int
    novel: tuple[float, ...]
    crossings: tuple[float, ...]
    replicates: int = 0
    seeds: tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.novel)


class TickRecord(NamedTuple):
    tick: int
    x: int
    y: int
    fear: float
    moved: bool
    novel_cell: bool


@dataclass(frozen=True)
class SweepRow:
    value: float
    mean: MeanCurve
    auc: float
    peak_bin: int
    t50: int | None


def run_sim(config: SimConfig, *, on_tick: Callable[[TickRecord], None] | None = None) -> SimResult:
    """Simulate one run from the moment the door opens.

    Stops when every arena cell has been visited and the agent is back in the
    refuge, or at ``max_ticks``. ``on_tick`` sees the state after each tick.
    """
    world, params = config.world, config.agent
    state = new_state(world, params)
    rng = np.random.default_rng(config.seed) if params.mode is PolicyMode.STOCHASTIC else None

    novel: list[int] = []
    crossings: list[int] = []
    completed = False
    for t in range(config.max_ticks):
        if t % config.bin_width == 0:
            novel.append(0)
            crossings.append(0)
        state, events = step(state, world, params, rng)
        if events.moved:
            crossings[-1] += 1
            if events.novel_cell:
                novel[-1] += 1
        if on_tick is not None:
            on_tick(TickRecord(state.tick - 1, state.pos.x, state.pos.y, state.fear, events.moved, events.novel_cell))
        if state.unvisited == 0 and world.in_refuge(state.pos):
            completed = True
            break

    return SimResult(
        curve=ExplorationCurve(bin_width=config.bin_width, novel=novel, crossings=crossings),
        completed=completed,
        ticks_used=state.tick,
        final_fear=state.fear,
    )


def trace_sim(config: SimConfig) -> list[TickRecord]:
    records: list[TickRecord] = []
    run_sim(config, on_tick=records.append)
    return records


def _run_seed(config: SimConfig, seed: int) -> SimResult:
    return run_sim(dataclasses.replace(config, seed=seed))


def mean_curve(results: Sequence[SimResult], seeds: Sequence[int]) -> MeanCurve:
    """Per-bin means after zero-padding every replicate to the longest curve."""
    bin_width = results[0].curve.bin_width
    length = max(len(r.curve) for r in results)
    novel = np.zeros((len(results), length), dtype=np.int64)
    crossings = np.zeros((len(results), length), dtype=np.int64)
    for i, r in enumerate(results):
        novel[i, :len(r.curve)] = r.curve.novel
        crossings[i, :len(r.curve)] = r.curve.crossings
    # Integer column sums are exact, so the mean does not depend on replicate order.
    n = len(results)
    return MeanCurve(
        bin_width=bin_width,
        novel=tuple((novel.sum(axis=0) / n).tolist()),
        crossings=tuple((crossings.sum(axis=0) / n).tolist()),
        replicates=n,
        seeds=tuple(int(s) for s in seeds),
    )


def run_replicates(
    config: SimConfig,
    seeds: Sequence[int],
    *,
    workers: int = 1,
) -> tuple[MeanCurve, list[SimResult]]:
    if not seeds:
        raise ValueError("run_replicates needs at least one seed")

    configs = [config] * len(seeds)
    if workers > 1 and len(seeds) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            # map() yields in submission order, whatever order runs finish in.
            results = list(pool.map(_run_seed, configs, seeds))
    else:
        results = [_run_seed(c, s) for c, s in zip(configs, seeds)]

    mean = mean_curve(results, seeds)
    logger.debug(
        "Replicates complete",
        extra={"fields": {"replicates": len(seeds), "completed": sum(r.completed for r in results), "bins": len(mean)}},
    )
    return mean, results


def sweep(
    base: SimConfig,
    param_name: str,
    values: Sequence[float],
    seeds: Sequence[int],
    *,
    workers: int = 1,
) -> list[SweepRow]:
    """One replicate set per value of ``param_name``, with summary metrics of each mean curve."""
    if param_name not in SWEEP_PARAMS:
        raise UnknownParam(f"Unknown sweep parameter {param_name!r}; expected one of {', '.join(SWEEP_PARAMS)}")
    if not values:
        raise EmptyValues("sweep needs at least one value")

    configs: list[SimConfig] = []
    for value in values:
        try:
            configs.append(base.with_agent(**{param_name: float(value)}))
        except ConfigInvalid as exc:
            raise ValueOutOfRange(str(exc)) from None

    rows: list[SweepRow] = []
    for value, config in zip(values, configs):
        mean, _ = run_replicates(config, seeds, workers=workers)
        total = auc(mean.novel)
        rows.append(
            SweepRow(
                value=float(value),
                mean=mean,
                auc=total,
                peak_bin=peak_bin(mean.novel)[0] if len(mean) else 0,
                t50=time_to_fraction(mean.novel, 0.5) if total > 0 else None,
            )
        )
    logger.info("Sweep complete", extra={"fields": {"param": param_name, "values": len(rows), "replicates": len(seeds)}})
    return rows
