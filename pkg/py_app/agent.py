"""The Explorer drive model.

Two competing drives decide whether the agent moves on a given tick: the urge
to explore (proportional to how much of the arena is still unvisited) and fear
(which habituates geometrically every tick after the door opens).

Random stream contract: stochastic mode draws exactly one
``numpy.random.Generator.random()`` value per tick, at the move decision, from
a PCG64 generator seeded by the caller. Deterministic mode draws nothing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple

import numpy as np

from py_app.errors import InvalidAgentParams
from py_app.gridworld import GridWorld, Position, nearest_refuge, nearest_unvisited, step_toward
from py_app.utils import clamp


class PolicyMode(str, Enum):
    STOCHASTIC = "stochastic"
    DETERMINISTIC = "deterministic"


@dataclass(frozen=True)
class AgentParams:
    fear_initial: float = 0.9
    fear_decay: float = 0.02
    w_explore: float = 1.0
    w_fear: float = 1.0
    mode: PolicyMode = PolicyMode.STOCHASTIC

    def __post_init__(self) -> None:
        for name in ("fear_initial", "fear_decay"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise InvalidAgentParams(f"{name} must be within [0, 1], got {value}", field=name)
        for name in ("w_explore", "w_fear"):
            value = getattr(self, name)
            if value < 0.0:
                raise InvalidAgentParams(f"{name} must be >= 0, got {value}", field=name)
        try:
            object.__setattr__(self, "mode", PolicyMode(self.mode))
        except ValueError:
            raise InvalidAgentParams(
                f"mode must be one of {[m.value for m in PolicyMode]}, got {self.mode!r}", field="mode"
            ) from None


@dataclass
class AgentState:
    pos: Position
    fear: float
    visited: np.ndarray  # (height, width) bool
    unvisited: int  # unvisited arena cells
    credit: float = 0.0
    tick: int = 0


class StepEvents(NamedTuple):
    moved: bool
    crossed_line: bool
    novel_cell: bool


class Drives(NamedTuple):
    explore_drive: float
    fear_drive: float
    move_intensity: float


IDLE = StepEvents(False, False, False)


def new_state(world: GridWorld, params: AgentParams) -> AgentState:
    """Agent confined to the refuge at the moment the door opens (t = 0)."""
    visited = world.refuge_mask.copy()
    visited[world.start.y, world.start.x] = True
    return AgentState(
        pos=world.start,
        fear=float(params.fear_initial),
        visited=visited,
        unvisited=world.arena_cell_count,
    )


def drives(unvisited_fraction: float, fear: float, params: AgentParams) -> Drives:
    explore_drive = params.w_explore * unvisited_fraction
    fear_drive = params.w_fear * fear
    return Drives(explore_drive, fear_drive, clamp(explore_drive - fear_drive, 0.0, 1.0))


def habituate(fear: float, fear_decay: float) -> float:
    return fear * (1.0 - fear_decay)


def step(
    state: AgentState,
    world: GridWorld,
    params: AgentParams,
    rng: np.random.Generator | None,
) -> tuple[AgentState, StepEvents]:
    """Advance ``state`` by one tick, in place, and return it with the tick's events.

    Once the arena is covered the agent walks home one cell per tick whatever
    the move decision says (move intensity is zero with nothing left to
    explore), then idles inside the refuge.
    """
    m = drives(state.unvisited / world.arena_cell_count, state.fear, params).move_intensity

    if params.mode is PolicyMode.STOCHASTIC:
        act = rng.random() < m
    else:
        state.credit += m
        act = state.credit >= 1.0
        if act:
            state.credit -= 1.0

    events = IDLE
    if state.unvisited > 0:
        if act:
            path = nearest_unvisited(world, state.visited, state.pos)
            events = _move(state, world, step_toward(state.pos, path.first_step))
    elif not world.in_refuge(state.pos):
        path = nearest_refuge(world, state.pos)
        events = _move(state, world, step_toward(state.pos, path.first_step))

    state.fear = habituate(state.fear, params.fear_decay)
    state.tick += 1
    return state, events


def _move(state: AgentState, world: GridWorld, dest: Position) -> StepEvents:
    novel = not state.visited[dest.y, dest.x]
    if novel:
        state.visited[dest.y, dest.x] = True
        state.unvisited -= 1
    state.pos = dest
    return StepEvents(moved=True, crossed_line=True, novel_cell=novel)
