"""Exception hierarchy for the simulator.

Every error raised on purpose by this package derives from ``ExplorerError``.
The CLI maps the families to exit codes (see ``py_app.main``).
"""

from __future__ import annotations


class ExplorerError(Exception):
    pass


class UsageError(ExplorerError):
    pass


# ── World / agent configuration ─────────────────────────────────────────────

class ConfigInvalid(ExplorerError, ValueError):
    def __init__(self, message: str, *, field: str = "") -> None:
        super().__init__(message)
        self.field = field


class InvalidGrid(ConfigInvalid):
    pass


class RefugeOutOfBounds(ConfigInvalid):
    pass


class NoArena(ConfigInvalid):
    pass


class StartOutsideRefuge(ConfigInvalid):
    pass


class InvalidAgentParams(ConfigInvalid):
    pass


# ── Curve metrics ───────────────────────────────────────────────────────────

class CurveError(ExplorerError, ValueError):
    pass


class EmptySeries(CurveError):
    pass


class ZeroTotal(CurveError):
    pass


class BadFraction(CurveError):
    pass


class BadWindow(CurveError):
    pass


class BinWidthMismatch(CurveError):
    pass


# ── Sweeps and fitting ──────────────────────────────────────────────────────

class SweepError(ExplorerError, ValueError):
    pass


class UnknownParam(SweepError):
    pass


class ValueOutOfRange(SweepError):
    pass


class EmptyValues(SweepError):
    pass


class FitError(ExplorerError, ValueError):
    pass


class EmptyTarget(FitError):
    pass


class EmptyGrid(FitError):
    pass


class BothEmpty(FitError):
    pass


# ── Files ───────────────────────────────────────────────────────────────────

class ConfigFileError(ExplorerError, ValueError):
    def __init__(self, message: str, *, key: str = "") -> None:
        super().__init__(message)
        self.key = key


class ParseError(ConfigFileError):
    pass


class UnknownKey(ConfigFileError):
    pass


class ConfigValidationError(ConfigFileError):
    pass


class CsvFormatError(ExplorerError, ValueError):
    pass


class BadHeader(CsvFormatError):
    pass


class BadRow(CsvFormatError):
    def __init__(self, message: str, *, row: int, reason: str) -> None:
        super().__init__(message)
        self.row = row
        self.reason = reason


class InconsistentBinWidth(CsvFormatError):
    pass


class PlotError(ExplorerError, ValueError):
    pass


class NoData(PlotError):
    pass
