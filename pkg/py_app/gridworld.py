"""Arena geometry: grid, refuge ("comfort zone"), adjacency and shortest paths.

Coordinates are (x, y) with x increasing east and y increasing south. The
grid has no obstacles, so BFS distance under the 4-neighborhood is the
Manhattan distance; ``nearest_unvisited`` evaluates it in closed form over a
numpy mask instead of expanding a frontier.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, NamedTuple

import numpy as np

from py_app.errors import InvalidGrid, NoArena, RefugeOutOfBounds, StartOutsideRefuge


class Position(NamedTuple):
    x: int
    y: int


class Direction(str, Enum):
    N = "N"
    E = "E"
    S = "S"
    W = "W"

    @property
    def delta(self) -> tuple[int, int]:
        return _DELTAS[self]


_DELTAS: dict[Direction, tuple[int, int]] = {
    Direction.N: (0, -1),
    Direction.E: (1, 0),
    Direction.S: (0, 1),
    Direction.W: (-1, 0),
}

# Tie-break order for first steps and neighbor listings.
DIRECTION_ORDER: tuple[Direction, ...] = (Direction.N, Direction.E, Direction.S, Direction.W)


class RefugeRect(NamedTuple):
    x: int
    y: int
    w: int
    h: int

    def contains(self, p: Position) -> bool:
        return self.x <= p[0] < self.x + self.w and self.y <= p[1] < self.y + self.h

    @property
    def cell_count(self) -> int:
        return self.w * self.h


class PathStep(NamedTuple):
    target: Position
    distance: int
    first_step: Direction | None  # None only when distance == 0


@dataclass(frozen=True)
class GridWorld:
    width: int
    height: int
    refuge: RefugeRect
    start: Position

    @property
    def cell_count(self) -> int:
        return self.width * self.height

    @property
    def arena_cell_count(self) -> int:
        return self.cell_count - self.refuge.cell_count

    def in_bounds(self, p: Position) -> bool:
        return 0 <= p[0] < self.width and 0 <= p[1] < self.height

    def in_refuge(self, p: Position) -> bool:
        return self.refuge.contains(p)

    @cached_property
    def refuge_mask(self) -> np.ndarray:
        mask = np.zeros((self.height, self.width), dtype=bool)
        r = self.refuge
        mask[r.y:r.y + r.h, r.x:r.x + r.w] = True
        mask.flags.writeable = False
        return mask

    @cached_property
    def arena_mask(self) -> np.ndarray:
        mask = ~self.refuge_mask
        mask.flags.writeable = False
        return mask

    @cached_property
    def _coords(self) -> tuple[np.ndarray, np.ndarray]:
        ys, xs = np.indices((self.height, self.width))
        return xs, ys

    def mask_of(self, cells: Iterable[Position]) -> np.ndarray:
        mask = np.zeros((self.height, self.width), dtype=bool)
        for x, y in cells:
            if self.in_bounds(Position(x, y)):
                mask[y, x] = True
        return mask

    def manhattan_from(self, origin: Position) -> np.ndarray:
        xs, ys = self._coords
        return np.abs(xs - origin[0]) + np.abs(ys - origin[1])


def new_grid(width: int, height: int, refuge: RefugeRect | tuple[int, int, int, int], start: Position | tuple[int, int]) -> GridWorld:
    if width < 1 or height < 1:
        raise InvalidGrid(f"Grid must be at least 1x1, got {width}x{height}", field="width" if width < 1 else "height")

    refuge = RefugeRect(*refuge)
    start = Position(*start)

    if refuge.w < 1 or refuge.h < 1:
        raise RefugeOutOfBounds(f"Refuge extent must be at least 1x1, got {refuge.w}x{refuge.h}", field="refuge")
    if refuge.x < 0 or refuge.y < 0 or refuge.x + refuge.w > width or refuge.y + refuge.h > height:
        raise RefugeOutOfBounds(
            f"Refuge {tuple(refuge)} does not fit inside a {width}x{height} grid", field="refuge"
        )
    if refuge.cell_count >= width * height:
        raise NoArena("Refuge covers the whole grid; no arena cells remain", field="refuge")
    if not refuge.contains(start):
        raise StartOutsideRefuge(f"Start {tuple(start)} lies outside refuge {tuple(refuge)}", field="start")

    return GridWorld(width=width, height=height, refuge=refuge, start=start)


def step_toward(p: Position, direction: Direction) -> Position:
    dx, dy = direction.delta
    return Position(p[0] + dx, p[1] + dy)


def neighbors(world: GridWorld, p: Position) -> list[Position]:
    out: list[Position] = []
    for direction in DIRECTION_ORDER:
        q = step_toward(p, direction)
        if world.in_bounds(q):
            out.append(q)
    return out


def nearest_in_mask(world: GridWorld, candidates: np.ndarray, origin: Position) -> PathStep | None:
    """Closest cell of ``candidates`` to ``origin`` and the first move toward it.

    Ties on distance go to the smallest (y, x); the first step is the first
    direction in N, E, S, W order whose neighbor is strictly closer.
    """
    if not candidates.any():
        return None

    dist = world.manhattan_from(origin)
    # Row-major flat index orders cells by (y, x), so argmin picks the tie-break winner.
    masked = np.where(candidates, dist, np.iinfo(dist.dtype).max)
    flat = int(np.argmin(masked))
    ty, tx = divmod(flat, world.width)
    target = Position(tx, ty)
    distance = int(dist[ty, tx])
    if distance == 0:
        return PathStep(target, 0, None)

    for direction in DIRECTION_ORDER:
        q = step_toward(origin, direction)
        if world.in_bounds(q) and abs(q[0] - tx) + abs(q[1] - ty) < distance:
            return PathStep(target, distance, direction)

    # Unreachable on an obstacle-free grid.
    raise AssertionError(f"no descending neighbor from {origin} toward {target}")


def nearest_unvisited(world: GridWorld, visited: np.ndarray | Iterable[Position], origin: Position) -> PathStep | None:
    """Nearest unvisited arena cell, or None once the arena is covered.

    ``visited`` is a (height, width) boolean mask or any iterable of positions.
    """
    if not isinstance(visited, np.ndarray):
        visited = world.mask_of(visited)
    return nearest_in_mask(world, world.arena_mask & ~visited, origin)


def nearest_refuge(world: GridWorld, origin: Position) -> PathStep:
    step = nearest_in_mask(world, world.refuge_mask, origin)
    assert step is not None  # refuge is never empty
    return step
