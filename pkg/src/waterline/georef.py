"""Pixel-to-GPS calibration from a control-point binding file.

A binding file carries at least two control points tying pixel coordinates to
geographic coordinates. From the most-separated pair along each pixel axis we
derive the per-axis scale in minutes per pixel, then anchor the linear
transform at pixel (0, 0) — top-left origin, latitude decreasing downward,
longitude increasing rightward. All arithmetic runs in total minutes
(degrees·60 + minutes); degree/minute views are derived at the edges.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BindingParseError,
    DegeneratePointsError,
    InsufficientPointsError,
)


@dataclass(frozen=True)
class ControlPoint:
    """One pixel location with known geographic coordinates."""

    px: int
    py: int
    lat_deg: int
    lat_min: float
    lon_deg: int
    lon_min: float

    def __post_init__(self):
        if self.px < 0 or self.py < 0:
            raise ValueError("pixel coordinates must be >= 0")
        if not 0 <= self.lat_min < 60:
            raise ValueError("lat_min must be in [0, 60)")
        if not 0 <= self.lon_min < 60:
            raise ValueError("lon_min must be in [0, 60)")

    @property
    def lat_total(self) -> float:
        """Latitude as total minutes."""
        return self.lat_deg * 60 + self.lat_min

    @property
    def lon_total(self) -> float:
        """Longitude as total minutes."""
        return self.lon_deg * 60 + self.lon_min


@dataclass(frozen=True)
class GeoTransform:
    """Axis-aligned linear pixel→GPS map anchored at pixel (0, 0)."""

    origin_lat_min_total: float
    origin_lon_min_total: float
    dv_lat: float  # minutes of latitude per pixel of y
    dv_lon: float  # minutes of longitude per pixel of x

    def __post_init__(self):
        if not self.dv_lat > 0:
            raise ValueError("dv_lat must be > 0")
        if not self.dv_lon > 0:
            raise ValueError("dv_lon must be > 0")


def _split_minutes(total: float) -> tuple[int, float]:
    # Floor division keeps 0 <= minutes < 60 for signed totals
    # (e.g. -5 minutes -> -1 deg 55 min).
    deg, minutes = divmod(total, 60.0)
    if minutes >= 60.0:  # float divmod can land exactly on the divisor
        deg += 1.0
        minutes -= 60.0
    return int(deg), minutes


@dataclass(frozen=True)
class GeoPoint:
    """Geographic coordinates in total minutes, signed."""

    lat: float
    lon: float

    @property
    def lat_view(self) -> tuple[int, float]:
        """(degrees, minutes) with deg·60 + min == lat and 0 <= min < 60."""
        return _split_minutes(self.lat)

    @property
    def lon_view(self) -> tuple[int, float]:
        """(degrees, minutes) with deg·60 + min == lon and 0 <= min < 60."""
        return _split_minutes(self.lon)


def parse_binding(text: str) -> list[ControlPoint]:
    """Parse binding-file contents.

    One control point per line::

        POINT <px> <py> <lat_deg> <lat_min> <lon_deg> <lon_min>

    Blank lines and lines starting with ``#`` are ignored. At least two
    points are required, and the set must not collapse onto a single pixel
    column or row (that would leave one axis uncalibratable).
    """
    points: list[ControlPoint] = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if fields[0] != "POINT":
            raise BindingParseError(
                line_number, f"expected 'POINT', got {fields[0]!r}"
            )
        if len(fields) != 7:
            raise BindingParseError(
                line_number, f"expected 6 fields after 'POINT', got {len(fields) - 1}"
            )
        try:
            point = ControlPoint(
                px=int(fields[1]),
                py=int(fields[2]),
                lat_deg=int(fields[3]),
                lat_min=float(fields[4]),
                lon_deg=int(fields[5]),
                lon_min=float(fields[6]),
            )
        except ValueError as exc:
            raise BindingParseError(line_number, str(exc)) from exc
        points.append(point)

    if len(points) < 2:
        raise InsufficientPointsError(
            f"need at least 2 control points, got {len(points)}"
        )
    if len({p.px for p in points}) < 2:
        raise DegeneratePointsError("all control points share the same px")
    if len({p.py for p in points}) < 2:
        raise DegeneratePointsError("all control points share the same py")
    return points


def division_values(points: list[ControlPoint]) -> GeoTransform:
    """Derive the per-axis minutes-per-pixel scale and the pixel-(0,0) origin.

    Each axis uses the pair of control points with the greatest pixel
    separation on that axis, which minimizes the relative error of the
    quotient |coordinate difference| / |pixel difference|. The origin is
    extrapolated from the first control point.
    """
    if len(points) < 2:
        raise InsufficientPointsError(
            f"need at least 2 control points, got {len(points)}"
        )

    lo_y = min(points, key=lambda p: p.py)
    hi_y = max(points, key=lambda p: p.py)
    lo_x = min(points, key=lambda p: p.px)
    hi_x = max(points, key=lambda p: p.px)

    if hi_y.py == lo_y.py:
        raise DegeneratePointsError("zero pixel separation in py")
    if hi_x.px == lo_x.px:
        raise DegeneratePointsError("zero pixel separation in px")

    dv_lat = abs(hi_y.lat_total - lo_y.lat_total) / abs(hi_y.py - lo_y.py)
    dv_lon = abs(hi_x.lon_total - lo_x.lon_total) / abs(hi_x.px - lo_x.px)
    if dv_lat == 0:
        raise DegeneratePointsError("control points span no latitude")
    if dv_lon == 0:
        raise DegeneratePointsError("control points span no longitude")

    first = points[0]
    return GeoTransform(
        origin_lat_min_total=first.lat_total + dv_lat * first.py,
        origin_lon_min_total=first.lon_total - dv_lon * first.px,
        dv_lat=dv_lat,
        dv_lon=dv_lon,
    )


def pixel_to_gps(t: GeoTransform, x: float, y: float) -> GeoPoint:
    """Map a pixel to GPS: latitude decreases with y, longitude grows with x."""
    return GeoPoint(
        lat=t.origin_lat_min_total - t.dv_lat * y,
        lon=t.origin_lon_min_total + t.dv_lon * x,
    )


def contour_to_gps(t: GeoTransform, contour) -> list[GeoPoint]:
    """Convert every (x, y) contour point, preserving order."""
    return [pixel_to_gps(t, x, y) for x, y in contour.points]
