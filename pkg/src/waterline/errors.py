"""Exception types shared across the waterline package."""

from __future__ import annotations


class WaterlineError(Exception):
    """Base class for all waterline-specific errors."""


class UnsupportedFormatError(WaterlineError):
    """Raster file is in a format the loader cannot decode."""


class CorruptImageError(WaterlineError):
    """Raster file is recognized but truncated or undecodable."""


class BindingParseError(WaterlineError):
    """Malformed line in a control-point binding file."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class InsufficientPointsError(WaterlineError):
    """Fewer than two usable control points in a binding file."""


class DegeneratePointsError(WaterlineError):
    """Control points cannot define a per-axis scale (zero separation)."""


class MismatchedContoursError(WaterlineError):
    """Contour list does not line up one-to-one with region labels."""


class StageError(WaterlineError):
    """Pipeline failure, annotated with the stage it occurred in."""

    def __init__(self, stage: int, name: str, cause: Exception):
        super().__init__(f"stage {stage} ({name}): {type(cause).__name__}: {cause}")
        self.stage = stage
        self.stage_name = name
        self.__cause__ = cause
