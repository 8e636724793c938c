"""Per-region area/perimeter measurement and kilometer conversion."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum

from .errors import MismatchedContoursError
from .georef import GeoTransform

# One geographic minute is one nautical mile.
KM_PER_MINUTE = 1.852

SQRT2 = math.sqrt(2.0)


class AreaMode(str, Enum):
    """How pixel measurements become kilometers.

    ``faithful`` multiplies both area and perimeter by the single
    latitude-derived km/px factor, even though applying a linear factor to a
    pixel area is dimensionally loose. ``corrected`` (the default) uses a
    separate longitude factor, shrunk by cos(latitude), so areas come out in
    true km².
    """

    FAITHFUL = "faithful"
    CORRECTED = "corrected"


@dataclass(frozen=True)
class RegionStats:
    region_id: int
    area_px: int
    perimeter_px: float
    area_km: float | None = None
    perimeter_km: float | None = None
    conversion_mode: AreaMode | None = None


def contour_length(contour) -> float:
    """Length of the traced path: 1 per axis step, √2 per diagonal step,
    including the closing step for closed contours. A single point has
    length 0."""
    pts = contour.points
    n = len(pts)
    if n < 2:
        return 0.0
    axis_steps = 0
    diagonal_steps = 0
    last = n if contour.closed else n - 1
    for i in range(last):
        x1, y1 = pts[i]
        x2, y2 = pts[(i + 1) % n]
        if x1 != x2 and y1 != y2:
            diagonal_steps += 1
        else:
            axis_steps += 1
    return axis_steps + diagonal_steps * SQRT2


def region_stats(labels, contours) -> list[RegionStats]:
    """Pixel-domain measurements, one entry per labeled region.

    ``labels`` is a LabelMap; ``contours`` must line up one-to-one with
    labels 1..region_count.
    """
    if len(contours) != labels.region_count:
        raise MismatchedContoursError(
            f"{len(contours)} contours for {labels.region_count} regions"
        )
    return [
        RegionStats(
            region_id=rid,
            area_px=int(labels.areas[rid - 1]),
            perimeter_px=contour_length(contours[rid - 1]),
        )
        for rid in range(1, labels.region_count + 1)
    ]


def to_kilometers(
    stats: RegionStats, t: GeoTransform, mode: AreaMode = AreaMode.CORRECTED
) -> RegionStats:
    """Fill the kilometer fields of ``stats`` using the map's scale."""
    mode = AreaMode(mode)
    kp_lat = KM_PER_MINUTE * t.dv_lat
    if mode is AreaMode.FAITHFUL:
        area_km = stats.area_px * kp_lat
    else:
        origin_lat_rad = math.radians(t.origin_lat_min_total / 60.0)
        kp_lon = KM_PER_MINUTE * t.dv_lon * math.cos(origin_lat_rad)
        area_km = stats.area_px * kp_lat * kp_lon
    return replace(
        stats,
        area_km=area_km,
        perimeter_km=stats.perimeter_px * kp_lat,
        conversion_mode=mode,
    )
