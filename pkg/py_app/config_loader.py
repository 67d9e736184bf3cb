"""JSON simulation config files.

Schema (every key except width/height optional):

    {"width": 20, "height": 20,
     "refuge": {"x": 0, "y": 0, "w": 4, "h": 4}, "start": [1, 1],
     "fear_initial": 0.9, "fear_decay": 0.02, "w_explore": 1, "w_fear": 1,
     "mode": "stochastic", "bin_width": 100, "max_ticks": 200000, "seed": 42}

Unknown keys are rejected so a typo never silently falls back to a default.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from py_app.agent import AgentParams
from py_app.engine import SimConfig
from py_app.errors import ConfigInvalid, ConfigValidationError, ParseError, UnknownKey
from py_app.gridworld import new_grid


class RefugeModel(BaseModel):
    model_config = ConfigDict(extra="forbid", strict=True)

    x: int = 0
    y: int = 0
    w: int = 4
    h: int = 4


class ConfigFile(BaseModel):
    model_config = ConfigDict(extra="forbid", strict=True)

    width: int
    height: int
    refuge: RefugeModel = Field(default_factory=RefugeModel)
    start: tuple[int, int] = (1, 1)
    fear_initial: float = 0.9
    fear_decay: float = 0.02
    w_explore: float = 1.0
    w_fear: float = 1.0
    mode: Literal["stochastic", "deterministic"] = "stochastic"
    bin_width: int = Field(default=100, ge=1)
    max_ticks: int = Field(default=200_000, ge=1)
    seed: int = Field(default=42, ge=0, lt=2**64)

    def to_sim_config(self) -> SimConfig:
        r = self.refuge
        world = new_grid(self.width, self.height, (r.x, r.y, r.w, r.h), self.start)
        agent = AgentParams(
            fear_initial=self.fear_initial,
            fear_decay=self.fear_decay,
            w_explore=self.w_explore,
            w_fear=self.w_fear,
            mode=self.mode,
        )
        return SimConfig(world=world, agent=agent, bin_width=self.bin_width, max_ticks=self.max_ticks, seed=self.seed)


def parse_config(text: str) -> SimConfig:
    try:
        data: Any = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"Config is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ParseError("Config must be a JSON object")

    unknown = sorted(set(data) - set(ConfigFile.model_fields))
    if unknown:
        raise UnknownKey(f"Unknown config key {unknown[0]!r}", key=unknown[0])

    # JSON has no float/int distinction for whole numbers; let 1 stand for 1.0.
    for name in ("fear_initial", "fear_decay", "w_explore", "w_fear"):
        if isinstance(data.get(name), int) and not isinstance(data.get(name), bool):
            data[name] = float(data[name])
    if isinstance(data.get("start"), list):
        data["start"] = tuple(data["start"])

    try:
        parsed = ConfigFile.model_validate(data)
    except ValidationError as exc:
        err = exc.errors()[0]
        loc = err.get("loc") or ()
        key = str(loc[0]) if loc else ""
        if len(loc) > 1 and key == "refuge" and err.get("type") == "extra_forbidden":
            raise UnknownKey(f"Unknown config key 'refuge.{loc[1]}'", key=f"refuge.{loc[1]}") from None
        raise ConfigValidationError(f"Invalid value for {key!r}: {err.get('msg')}", key=key) from None

    try:
        return parsed.to_sim_config()
    except ConfigInvalid as exc:
        raise ConfigValidationError(f"Invalid value for {exc.field!r}: {exc}", key=exc.field) from None


def load_config(path: str | Path) -> SimConfig:
    return parse_config(Path(path).read_text(encoding="utf-8"))
