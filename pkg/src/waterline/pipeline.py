"""End-to-end orchestration: image in, autopilot files out.

The stages run in a fixed order — load, HSV binarization, morphological
cleanup, edge/contour extraction, binding parse, scale derivation, GPS
conversion, measurement — and any failure is re-raised as a StageError
naming the stage. Output rendering is split from computation so the same
report can be written to disk or shipped over the service API.
"""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .colorspace import DEFAULT_WATER_RANGE, HsvRange, hsv_mask
from .edges import (
    Contour,
    OperatorKind,
    OperatorReport,
    compare_operators,
    edge_mask,
    gradient,
    trace_contours,
)
from .errors import StageError
from .georef import GeoPoint, GeoTransform, contour_to_gps, division_values, parse_binding
from .metrics import AreaMode, RegionStats, region_stats, to_kilometers
from .morphology import StructuringElement, clean, label_components
from .raster import load_image, save_mask

MORPH_ORDERS = ("dilate_first", "erode_first")

OUTPUT_FILES = ("regions.csv", "contours.csv", "contours.txt")


@dataclass
class PipelineConfig:
    """Everything one extraction run needs; defaults follow the documented
    water thresholds, 3×3 closing with a 50 px area floor, and Sobel."""

    image_path: str
    binding_path: str
    output_dir: str = "."
    hsv_range: HsvRange = DEFAULT_WATER_RANGE
    se_size: int = 3
    morph_order: str = "dilate_first"
    min_area: int = 50
    operator: OperatorKind = OperatorKind.SOBEL
    edge_threshold: float = 0.0
    area_mode: AreaMode = AreaMode.CORRECTED
    emit_diagnostics: bool = False

    def __post_init__(self):
        if not self.image_path:
            raise ValueError("image_path must be non-empty")
        if not self.binding_path:
            raise ValueError("binding_path must be non-empty")
        if not self.output_dir:
            raise ValueError("output_dir must be non-empty")
        if self.se_size < 1 or self.se_size % 2 == 0:
            raise ValueError("se_size must be odd and >= 1")
        if self.morph_order not in MORPH_ORDERS:
            raise ValueError(f"morph_order must be one of {MORPH_ORDERS}")
        if self.min_area < 0:
            raise ValueError("min_area must be >= 0")
        if self.edge_threshold < 0:
            raise ValueError("edge_threshold must be >= 0")
        self.operator = OperatorKind(self.operator)
        self.area_mode = AreaMode(self.area_mode)
        if not isinstance(self.hsv_range, HsvRange):
            self.hsv_range = HsvRange.from_sequence(self.hsv_range)


@dataclass
class PipelineReport:
    """Everything run_pipeline produced, ready for rendering or inspection."""

    regions: list[RegionStats]
    geo_contours: list[list[GeoPoint]]
    stage_timings: dict[str, float]
    config_echo: PipelineConfig
    pixel_contours: list[Contour]
    transform: GeoTransform
    diagnostics: dict[str, np.ndarray] = field(default_factory=dict)

    @property
    def no_regions_found(self) -> bool:
        return not self.regions


@contextmanager
def _stage(number: int, name: str, timings: dict[str, float]):
    started = time.perf_counter()
    try:
        yield
    except StageError:
        raise
    except Exception as exc:
        raise StageError(number, name, exc) from exc
    finally:
        timings[f"{number}-{name}"] = time.perf_counter() - started


def run_pipeline(cfg: PipelineConfig) -> PipelineReport:
    """Run every stage on cfg's inputs and return the full report.

    An empty cleaned mask is not an error: the report simply carries zero
    regions (see ``PipelineReport.no_regions_found``) and renders to
    header-only files.
    """
    timings: dict[str, float] = {}

    with _stage(1, "load", timings):
        image = load_image(cfg.image_path)

    with _stage(2, "binarize", timings):
        raw_mask = hsv_mask(image, cfg.hsv_range)

    with _stage(3, "clean", timings):
        se = StructuringElement.square(cfg.se_size)
        cleaned = clean(
            raw_mask,
            se,
            min_area=cfg.min_area,
            dilate_first=cfg.morph_order == "dilate_first",
        )

    with _stage(4, "edges", timings):
        grad = gradient(cleaned, cfg.operator)
        edge_raster = edge_mask(grad, cfg.edge_threshold)
        contours = trace_contours(cleaned)

    with _stage(5, "binding", timings):
        binding_text = Path(cfg.binding_path).read_text(encoding="utf-8")
        points = parse_binding(binding_text)

    with _stage(6, "scale", timings):
        transform = division_values(points)

    with _stage(7, "gps", timings):
        geo_contours = [contour_to_gps(transform, c) for c in contours]

    with _stage(8, "measure", timings):
        labels = label_components(cleaned)
        pixel_stats = region_stats(labels, contours)
        regions = [to_kilometers(s, transform, cfg.area_mode) for s in pixel_stats]

    diagnostics: dict[str, np.ndarray] = {}
    if cfg.emit_diagnostics:
        diagnostics = {
            "binary_mask": raw_mask,
            "cleaned_mask": cleaned,
            f"edges_{cfg.operator.value}": edge_raster,
        }

    return PipelineReport(
        regions=regions,
        geo_contours=geo_contours,
        stage_timings=timings,
        config_echo=cfg,
        pixel_contours=contours,
        transform=transform,
        diagnostics=diagnostics,
    )


def _fmt(value: float) -> str:
    return f"{value:.6f}"


def render_outputs(report: PipelineReport) -> dict[str, str]:
    """Render the three output files as strings, keyed by file name.

    Rendering is pure and locale-independent (six decimal places, ``.``
    separator), so equal reports always render byte-identically.
    """
    region_lines = ["region_id,area_px,perimeter_px,area_km,perimeter_km,mode"]
    for r in report.regions:
        region_lines.append(
            f"{r.region_id},{r.area_px},{_fmt(r.perimeter_px)},"
            f"{_fmt(r.area_km)},{_fmt(r.perimeter_km)},{r.conversion_mode.value}"
        )

    contour_lines = ["region_id,point_index,lat_deg,lat_min,lon_deg,lon_min"]
    for r, geo in zip(report.regions, report.geo_contours):
        for index, point in enumerate(geo):
            lat_deg, lat_min = point.lat_view
            lon_deg, lon_min = point.lon_view
            contour_lines.append(
                f"{r.region_id},{index},{lat_deg},{_fmt(lat_min)},{lon_deg},{_fmt(lon_min)}"
            )

    blocks = []
    for r, geo in zip(report.regions, report.geo_contours):
        lines = [f"REGION {r.region_id} {len(geo)}"]
        for point in geo:
            lat_deg, lat_min = point.lat_view
            lon_deg, lon_min = point.lon_view
            lines.append(f"{lat_deg} {_fmt(lat_min)} {lon_deg} {_fmt(lon_min)}")
        blocks.append("\n".join(lines))

    return {
        "regions.csv": "\n".join(region_lines) + "\n",
        "contours.csv": "\n".join(contour_lines) + "\n",
        "contours.txt": "\n\n".join(blocks) + "\n" if blocks else "",
    }


def write_outputs(report: PipelineReport, out_dir: str | Path) -> list[Path]:
    """Write regions.csv, contours.csv, and contours.txt under ``out_dir``."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name, text in render_outputs(report).items():
        path = out / name
        path.write_text(text, encoding="utf-8", newline="\n")
        written.append(path)
    return written


def write_diagnostics(report: PipelineReport, out_dir: str | Path) -> list[Path]:
    """Write any diagnostic rasters carried by the report as PNGs."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name, mask in report.diagnostics.items():
        path = out / f"{name}.png"
        save_mask(mask, path)
        written.append(path)
    return written


@dataclass
class CompareReport:
    """Operator comparison over one image's cleaned water mask."""

    reports: list[OperatorReport]
    stage_timings: dict[str, float]


def run_compare(
    image_path: str | Path,
    hsv_range: HsvRange = DEFAULT_WATER_RANGE,
    se_size: int = 3,
    morph_order: str = "dilate_first",
    min_area: int = 50,
) -> CompareReport:
    """Binarize and clean the image exactly as ``extract`` would, then run
    all three gradient operators on the same mask."""
    timings: dict[str, float] = {}
    with _stage(1, "load", timings):
        image = load_image(image_path)
    with _stage(2, "binarize", timings):
        raw_mask = hsv_mask(image, hsv_range)
    with _stage(3, "clean", timings):
        cleaned = clean(
            raw_mask,
            StructuringElement.square(se_size),
            min_area=min_area,
            dilate_first=morph_order == "dilate_first",
        )
    with _stage(4, "edges", timings):
        reports = compare_operators(cleaned)
    return CompareReport(reports=reports, stage_timings=timings)


def render_comparison(reports: list[OperatorReport]) -> str:
    """Delimited comparison table, one row per operator."""
    lines = ["operator,edge_pixels,mean_nonzero_magnitude,peak_abs_gx,peak_abs_gy"]
    for rep in reports:
        lines.append(
            f"{rep.operator.value},{rep.edge_pixels},"
            f"{_fmt(rep.mean_nonzero_magnitude)},{rep.peak_abs_gx},{rep.peak_abs_gy}"
        )
    return "\n".join(lines) + "\n"


def write_comparison(compare: CompareReport, out_dir: str | Path) -> list[Path]:
    """Write comparison.csv plus one edge raster PNG per operator."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    table = out / "comparison.csv"
    table.write_text(render_comparison(compare.reports), encoding="utf-8", newline="\n")
    written = [table]
    for rep in compare.reports:
        path = out / f"edges_{rep.operator.value}.png"
        save_mask(rep.edges, path)
        written.append(path)
    return written


def parse_config_file(text: str) -> dict[str, str]:
    """Parse a ``key = value`` config file into a string map.

    Blank lines and ``#`` comments are ignored; keys are normalized to
    underscore form. Callers convert values to their typed forms.
    """
    values: dict[str, str] = {}
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"config line {line_number}: expected key=value")
        key, _, value = line.partition("=")
        values[key.strip().replace("-", "_")] = value.strip()
    return values
