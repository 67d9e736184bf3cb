"""Recover fear parameters by matching replicate-mean curves to a target curve.

The search is a full coarse grid followed by coordinate descent from the grid
optimum. Every evaluation reuses the same seed list, so two parameter points
are always compared on common random numbers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from py_app.curves import CurveLike
from py_app.engine import SimConfig, run_replicates
from py_app.errors import BothEmpty, EmptyGrid, EmptyTarget, ValueOutOfRange
from py_app.logger import get_logger
from py_app.utils import clamp

FIT_PARAMS = ("fear_initial", "fear_decay")

logger = get_logger()


@dataclass(frozen=True)
class FitSpec:
    base: SimConfig
    free: tuple[str, ...]
    seeds: tuple[int, ...]
    grid: dict[str, tuple[float, ...]]
    refine_tol: float = 1e-3
    max_refine_iters: int = 40
    workers: int = 1

    def __post_init__(self) -> None:
        unknown = [p for p in self.free if p not in FIT_PARAMS]
        if unknown:
            raise ValueOutOfRange(f"Cannot fit {', '.join(unknown)}; free parameters are {', '.join(FIT_PARAMS)}")
        for name, values in self.grid.items():
            for v in values:
                if not 0.0 <= v <= 1.0:
                    raise ValueOutOfRange(f"grid value {v} for {name} is outside [0, 1]")
        if not self.seeds:
            raise ValueError("FitSpec needs at least one replicate seed")

    @property
    def ordered_free(self) -> tuple[str, ...]:
        return tuple(p for p in FIT_PARAMS if p in self.free)


@dataclass(frozen=True)
class TraceEntry:
    params: dict[str, float]
    loss: float


@dataclass(frozen=True)
class FitResult:
    best_params: dict[str, float]
    best_loss: float
    evaluations: int
    trace: tuple[TraceEntry, ...] = field(default_factory=tuple)

    def as_dict(self) -> dict:
        return {
            "best_params": dict(self.best_params),
            "best_loss": self.best_loss,
            "evaluations": self.evaluations,
            "trace": [{"params": dict(e.params), "loss": e.loss} for e in self.trace],
        }


def curve_loss(simulated_mean: Sequence[float], target: Sequence[float]) -> float:
    """Mean squared per-bin difference after zero-padding both series to the longer length."""
    length = max(len(simulated_mean), len(target))
    if length == 0:
        raise BothEmpty("curve_loss needs at least one non-empty series")
    a = np.zeros(length)
    b = np.zeros(length)
    a[:len(simulated_mean)] = simulated_mean
    b[:len(target)] = target
    return float(np.mean((a - b) ** 2))


def _sort_key(params: dict[str, float], loss: float) -> tuple[float, float, float]:
    return (loss, params["fear_initial"], params["fear_decay"])


class _Objective:
    def __init__(self, spec: FitSpec, target: CurveLike) -> None:
        self.spec = spec
        self.target = list(target.novel)
        self.cache: dict[tuple[float, float], float] = {}
        self.trace: list[TraceEntry] = []

    def params_for(self, fear_initial: float, fear_decay: float) -> dict[str, float]:
        return {"fear_initial": fear_initial, "fear_decay": fear_decay}

    def __call__(self, fear_initial: float, fear_decay: float) -> float:
        key = (fear_initial, fear_decay)
        if key in self.cache:
            return self.cache[key]
        config = self.spec.base.with_agent(fear_initial=fear_initial, fear_decay=fear_decay)
        mean, _ = run_replicates(config, self.spec.seeds, workers=self.spec.workers)
        loss = curve_loss(mean.novel, self.target)
        self.cache[key] = loss
        self.trace.append(TraceEntry(self.params_for(fear_initial, fear_decay), loss))
        logger.debug("Fit evaluation", extra={"fields": {"fear_initial": fear_initial, "fear_decay": fear_decay, "loss": loss}})
        return loss


def _initial_step(values: Sequence[float]) -> float:
    distinct = sorted(set(values))
    if len(distinct) < 2:
        return 0.1
    return round(min(b - a for a, b in zip(distinct, distinct[1:])), 12)


def fit_params(spec: FitSpec, target: CurveLike) -> FitResult:
    if len(target.novel) == 0:
        raise EmptyTarget("target curve has no bins")
    free = spec.ordered_free
    if not free or any(not spec.grid.get(p) for p in free):
        raise EmptyGrid("every free parameter needs at least one coarse-grid value")

    objective = _Objective(spec, target)
    fixed = {"fear_initial": spec.base.agent.fear_initial, "fear_decay": spec.base.agent.fear_decay}

    # Phase 1: coarse grid.
    for combo in itertools.product(*(spec.grid[p] for p in free)):
        point = {**fixed, **dict(zip(free, (float(v) for v in combo)))}
        objective(point["fear_initial"], point["fear_decay"])

    start = min(objective.trace, key=lambda e: _sort_key(e.params, e.loss))
    current = dict(start.params)
    current_loss = start.loss

    # Phase 2: coordinate descent.
    steps = {p: _initial_step(spec.grid[p]) for p in free}
    iters = 0
    while iters < spec.max_refine_iters and any(steps[p] >= spec.refine_tol for p in free):
        iters += 1
        for p in free:
            if steps[p] < spec.refine_tol:
                continue
            improved = False
            for sign in (1.0, -1.0):
                probe = dict(current)
                probe[p] = round(clamp(current[p] + sign * steps[p], 0.0, 1.0), 12)
                if probe[p] == current[p]:
                    continue
                loss = objective(probe["fear_initial"], probe["fear_decay"])
                if loss < current_loss:
                    current, current_loss = probe, loss
                    improved = True
                    break
            if not improved:
                steps[p] /= 2.0

    best = min(objective.trace, key=lambda e: _sort_key(e.params, e.loss))
    result = FitResult(
        best_params={p: best.params[p] for p in FIT_PARAMS},
        best_loss=best.loss,
        evaluations=len(objective.trace),
        trace=tuple(objective.trace),
    )
    logger.info(
        "Fit complete",
        extra={"fields": {"best_params": result.best_params, "best_loss": result.best_loss, "evaluations": result.evaluations, "refine_iters": iters}},
    )
    return result
