"""Binding-file parsing and the pixel-to-GPS transform.

Hand-computed totals: 44 deg 36.0 min = 2676 min, 44 deg 30.0 min = 2670
min, 33 deg 30.0 min = 2010 min, 33 deg 42.0 min = 2022 min.
"""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from waterline import (
    BindingParseError,
    Contour,
    ControlPoint,
    DegeneratePointsError,
    GeoTransform,
    InsufficientPointsError,
    contour_to_gps,
    division_values,
    parse_binding,
    pixel_to_gps,
)

TWO_POINTS = "POINT 400 600 44 30.0 33 42.0\nPOINT 0 0 44 36.0 33 30.0"


class TestParseBinding:
    def test_two_point_file(self):
        points = parse_binding(TWO_POINTS)
        assert len(points) == 2
        assert points[0].px == 400 and points[0].py == 600
        assert points[1] == ControlPoint(0, 0, 44, 36.0, 33, 30.0)

    def test_comments_and_blank_lines_ignored(self):
        text = "# header\n\nPOINT 0 0 44 36.0 33 30.0\n\n# mid\nPOINT 10 10 44 35.0 33 31.0\n"
        assert len(parse_binding(text)) == 2

    def test_empty_file_insufficient(self):
        with pytest.raises(InsufficientPointsError):
            parse_binding("")

    def test_single_point_insufficient(self):
        with pytest.raises(InsufficientPointsError):
            parse_binding("POINT 0 0 44 36.0 33 30.0")

    def test_arity_error_carries_line_number(self):
        with pytest.raises(BindingParseError) as err:
            parse_binding("POINT 0 0 44")
        assert err.value.line_number == 1
        assert "line 1" in str(err.value)

    def test_error_line_number_counts_comments(self):
        text = "# one\n# two\nPOINT 0 0 44 36.0 33 30.0\nPOINT bad\n"
        with pytest.raises(BindingParseError) as err:
            parse_binding(text)
        assert err.value.line_number == 4

    def test_wrong_tag(self):
        with pytest.raises(BindingParseError):
            parse_binding("PT 0 0 44 36.0 33 30.0\nPOINT 1 1 44 35.0 33 31.0")

    def test_non_numeric_field(self):
        with pytest.raises(BindingParseError):
            parse_binding("POINT 0 zero 44 36.0 33 30.0\nPOINT 1 1 44 35.0 33 31.0")

    def test_minutes_out_of_range(self):
        with pytest.raises(BindingParseError) as err:
            parse_binding("POINT 0 0 44 60.0 33 30.0\nPOINT 1 1 44 35.0 33 31.0")
        assert err.value.line_number == 1

    def test_negative_pixel_rejected(self):
        with pytest.raises(BindingParseError):
            parse_binding("POINT -1 0 44 36.0 33 30.0\nPOINT 1 1 44 35.0 33 31.0")

    def test_all_same_px_degenerate(self):
        text = "POINT 5 0 44 36.0 33 30.0\nPOINT 5 100 44 35.0 33 31.0"
        with pytest.raises(DegeneratePointsError):
            parse_binding(text)

    def test_all_same_py_degenerate(self):
        text = "POINT 0 5 44 36.0 33 30.0\nPOINT 100 5 44 35.0 33 31.0"
        with pytest.raises(DegeneratePointsError):
            parse_binding(text)


class TestControlPoint:
    def test_total_minutes(self):
        p = ControlPoint(0, 0, 44, 36.0, 33, 30.0)
        assert p.lat_total == 2676.0
        assert p.lon_total == 2010.0

    def test_invariants(self):
        with pytest.raises(ValueError):
            ControlPoint(0, 0, 44, -0.5, 33, 30.0)
        with pytest.raises(ValueError):
            ControlPoint(0, -2, 44, 30.0, 33, 30.0)


class TestDivisionValues:
    def test_hand_example(self):
        # lat: |2676 - 2670| / 600, lon: |2022 - 2010| / 400
        t = division_values(parse_binding(TWO_POINTS))
        assert t.dv_lat == pytest.approx(6 / 600, abs=0)
        assert t.dv_lon == pytest.approx(12 / 400, abs=0)

    def test_lat_example_from_totals(self):
        pts = [
            ControlPoint(0, 0, 44, 36.0, 33, 30.0),
            ControlPoint(100, 600, 44, 30.0, 33, 31.0),
        ]
        assert division_values(pts).dv_lat == pytest.approx(0.01, abs=1e-15)

    def test_degree_boundary_crossing(self):
        # 45 deg 01' - 44 deg 59' = 2701 - 2699 = 2 minutes over 200 px.
        pts = [
            ControlPoint(0, 0, 44, 59.0, 44, 59.0),
            ControlPoint(200, 100, 45, 1.0, 45, 1.0),
        ]
        t = division_values(pts)
        assert t.dv_lon == pytest.approx(2 / 200, abs=1e-15)

    def test_most_separated_pair_wins(self):
        # The middle point is inconsistent; the extremes must define the scale.
        pts = [
            ControlPoint(0, 0, 44, 36.0, 33, 30.0),
            ControlPoint(10, 10, 44, 0.0, 33, 59.0),
            ControlPoint(400, 600, 44, 30.0, 33, 42.0),
        ]
        t = division_values(pts)
        assert t.dv_lat == pytest.approx(6 / 600, abs=0)
        assert t.dv_lon == pytest.approx(12 / 400, abs=0)

    def test_origin_extrapolated_from_offset_first_point(self):
        pts = [
            ControlPoint(100, 50, 44, 35.5, 33, 33.0),
            ControlPoint(500, 450, 44, 31.5, 33, 45.0),
        ]
        t = division_values(pts)
        # dv_lat = 4/400 = 0.01, dv_lon = 12/400 = 0.03
        assert t.origin_lat_min_total == pytest.approx(2675.5 + 0.01 * 50)
        assert t.origin_lon_min_total == pytest.approx(2013.0 - 0.03 * 100)
        # and the transform reproduces the first point itself
        g = pixel_to_gps(t, 100, 50)
        assert g.lat == pytest.approx(2675.5, abs=1e-9)
        assert g.lon == pytest.approx(2013.0, abs=1e-9)

    def test_zero_pixel_separation(self):
        pts = [
            ControlPoint(0, 5, 44, 36.0, 33, 30.0),
            ControlPoint(100, 5, 44, 35.0, 33, 31.0),
        ]
        with pytest.raises(DegeneratePointsError):
            division_values(pts)

    def test_zero_coordinate_span(self):
        pts = [
            ControlPoint(0, 0, 44, 36.0, 33, 30.0),
            ControlPoint(100, 100, 44, 36.0, 33, 31.0),
        ]
        with pytest.raises(DegeneratePointsError):
            division_values(pts)

    def test_transform_requires_positive_scales(self):
        with pytest.raises(ValueError):
            GeoTransform(2676.0, 2010.0, 0.0, 0.03)


class TestPixelToGps:
    def test_origin_pixel(self):
        t = GeoTransform(2676.0, 2010.0, 0.01, 0.03)
        g = pixel_to_gps(t, 0, 0)
        assert g.lat == 2676.0 and g.lon == 2010.0

    def test_latitude_decreases_down(self):
        t = GeoTransform(2676.0, 2010.0, 0.01, 0.03)
        g = pixel_to_gps(t, 0, 100)
        assert g.lat == pytest.approx(2675.0)
        assert g.lat_view == (44, pytest.approx(35.0))

    def test_longitude_increases_right(self):
        t = GeoTransform(2010.0, 2010.0, 0.01, 0.02)
        g = pixel_to_gps(t, 50, 0)
        assert g.lon == pytest.approx(2011.0)
        assert g.lon_view == (33, pytest.approx(31.0))

    def test_round_trip_at_control_points(self):
        points = parse_binding(TWO_POINTS)
        t = division_values(points)
        for p in points:
            g = pixel_to_gps(t, p.px, p.py)
            assert abs(g.lat - p.lat_total) < 1e-9
            assert abs(g.lon - p.lon_total) < 1e-9

    @given(
        st.integers(0, 2000), st.integers(0, 2000),
        st.integers(0, 2000), st.integers(0, 2000),
    )
    def test_linearity(self, x1, y1, x2, y2):
        t = GeoTransform(2676.0, 2010.0, 0.01, 0.03)
        a = pixel_to_gps(t, x1, y1)
        b = pixel_to_gps(t, x2, y2)
        assert a.lat - b.lat == pytest.approx(t.dv_lat * (y2 - y1), abs=1e-9)
        assert b.lon - a.lon == pytest.approx(t.dv_lon * (x2 - x1), abs=1e-9)

    @given(st.floats(-10000, 10000))
    def test_view_invariant(self, total):
        from waterline.georef import _split_minutes

        deg, minutes = _split_minutes(total)
        assert 0 <= minutes < 60
        assert deg * 60 + minutes == pytest.approx(total, abs=1e-9)

    def test_negative_total_views(self):
        from waterline.georef import _split_minutes

        assert _split_minutes(-5.0) == (-1, 55.0)
        assert _split_minutes(-60.0) == (-1, 0.0)
        assert _split_minutes(0.0) == (0, 0.0)


class TestContourToGps:
    def test_empty_contour(self):
        t = GeoTransform(2676.0, 2010.0, 0.01, 0.03)
        assert contour_to_gps(t, Contour(points=())) == []

    def test_single_origin_point(self):
        t = GeoTransform(2676.0, 2010.0, 0.01, 0.03)
        (g,) = contour_to_gps(t, Contour(points=((0, 0),)))
        assert (g.lat, g.lon) == (2676.0, 2010.0)

    def test_square_contour_monotone_axes(self):
        t = GeoTransform(2676.0, 2010.0, 0.01, 0.03)
        square = Contour(points=((1, 1), (2, 1), (3, 1), (3, 2), (3, 3), (2, 3), (1, 3), (1, 2)))
        geo = contour_to_gps(t, square)
        assert len(geo) == 8
        for (x, y), g in zip(square.points, geo):
            ref = pixel_to_gps(t, x, y)
            assert (g.lat, g.lon) == (ref.lat, ref.lon)
        # clockwise from the top-left corner: east along the top row first
        # (lon strictly up), then south down the right side (lat strictly down)
        lons = [g.lon for g in geo]
        lats = [g.lat for g in geo]
        assert lons[0] < lons[1] < lons[2]
        assert lats[2] > lats[3] > lats[4]
