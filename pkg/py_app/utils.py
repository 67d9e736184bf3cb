from __future__ import annotations

import json
from pathlib import Path
from typing import Any


def clamp(value: float, low: float, high: float) -> float:
    return low if value < low else high if value > high else value


def parse_csv_list(value: Any) -> list[str]:
    """Split a comma-separated CLI value into trimmed, non-empty items."""
    if not value or not isinstance(value, str):
        return []
    return [part.strip() for part in value.split(",") if part.strip()]


def dump_json_compact(payload: Any) -> str:
    """JSON with insertion-ordered keys and no whitespace, for byte-stable output."""
    return json.dumps(payload, separators=(",", ":"))


def write_text(path: Path, text: str) -> None:
    path = Path(path).resolve()
    path.parent.mkdir(parents=True, exist_ok=True)
    # newline="" keeps LF endings on every platform.
    with path.open("w", encoding="utf-8", newline="") as fh:
        fh.write(text)
