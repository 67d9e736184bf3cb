from __future__ import annotations

from typing import Literal

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_file=".env", env_file_encoding="utf-8", extra="ignore")

    log_level: LogLevel = Field(default="INFO", alias="EXPLORER_LOG_LEVEL")

    # 1 = run replicates in-process; >1 = process pool of that size.
    workers: int = Field(default=1, ge=1, alias="EXPLORER_WORKERS")
    default_replicates: int = Field(default=32, ge=1, alias="EXPLORER_REPLICATES")

    fit_coarse_step: float = Field(default=0.05, gt=0, le=1, alias="EXPLORER_FIT_COARSE_STEP")

    plot_width: int = Field(default=720, ge=200, alias="EXPLORER_PLOT_WIDTH")
    plot_height: int = Field(default=420, ge=150, alias="EXPLORER_PLOT_HEIGHT")

    @field_validator("log_level", mode="before")
    @classmethod
    def _upper_log_level(cls, value: object) -> object:
        return value.strip().upper() if isinstance(value, str) else value
