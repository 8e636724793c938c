"""Request/response models for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, Field, field_validator

from ..colorspace import HsvRange
from ..pipeline import MORPH_ORDERS


class ExtractOptions(BaseModel):
    """Pipeline parameters accepted by POST /extract as form fields."""

    operator: str = "sobel"
    hsv: str | None = None
    se: int = Field(default=3, ge=1)
    min_area: int = Field(default=50, ge=0)
    area_mode: str = "corrected"
    edge_threshold: float = Field(default=0.0, ge=0.0)
    morph_order: str = "dilate_first"
    diagnostics: bool = False

    @field_validator("operator")
    @classmethod
    def _operator_known(cls, v: str) -> str:
        if v not in ("sobel", "roberts", "prewitt"):
            raise ValueError(f"unknown operator {v!r}")
        return v

    @field_validator("area_mode")
    @classmethod
    def _mode_known(cls, v: str) -> str:
        if v not in ("faithful", "corrected"):
            raise ValueError(f"unknown area mode {v!r}")
        return v

    @field_validator("morph_order")
    @classmethod
    def _order_known(cls, v: str) -> str:
        if v not in MORPH_ORDERS:
            raise ValueError(f"unknown morph order {v!r}")
        return v

    @field_validator("se")
    @classmethod
    def _se_odd(cls, v: int) -> int:
        if v % 2 == 0:
            raise ValueError("se must be odd")
        return v

    def hsv_range(self) -> HsvRange | None:
        if self.hsv is None:
            return None
        return HsvRange.from_sequence([float(p) for p in self.hsv.split(",")])


class RegionModel(BaseModel):
    """One measured water region."""

    region_id: int
    area_px: int
    perimeter_px: float
    area_km: float
    perimeter_km: float
    mode: str


class ExtractResponse(BaseModel):
    """Full result of one extraction run.

    ``files`` carries the rendered output files keyed by file name, exactly
    as the CLI writes them; ``diagnostics`` carries base64 PNGs when
    requested.
    """

    regions: list[RegionModel]
    no_regions_found: bool
    stage_timings: dict[str, float]
    files: dict[str, str]
    diagnostics: dict[str, str] = Field(default_factory=dict)


class OperatorStatsModel(BaseModel):
    """Edge statistics for one gradient operator."""

    operator: str
    edge_pixels: int
    mean_nonzero_magnitude: float
    peak_abs_gx: int
    peak_abs_gy: int


class CompareResponse(BaseModel):
    """Result of the three-operator comparison."""

    operators: list[OperatorStatsModel]
    table: str
    rasters: dict[str, str]
    stage_timings: dict[str, float]


class HealthResponse(BaseModel):
    status: str
    version: str
