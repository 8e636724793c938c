"""RGB to HSV conversion and HSV-range binarization.

Images are float arrays of shape (H, W, 3) with channels in [0, 1]; masks
are uint8 arrays of shape (H, W) holding only 0 and 1. Hue is computed in
degrees [0, 360) but range tests happen on the fractional scale H/360, which
is how thresholds are configured throughout the package.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class HsvPixel:
    """One pixel in HSV: hue in degrees [0, 360), saturation/value in [0, 1]."""

    h: float
    s: float
    v: float

    @property
    def h_fraction(self) -> float:
        return self.h / 360.0


@dataclass(frozen=True)
class HsvRange:
    """Closed per-channel intervals; hue bounds are fractions of 360 degrees."""

    h_lo: float
    h_hi: float
    s_lo: float
    s_hi: float
    v_lo: float
    v_hi: float

    def __post_init__(self):
        for lo, hi, name in (
            (self.h_lo, self.h_hi, "hue"),
            (self.s_lo, self.s_hi, "saturation"),
            (self.v_lo, self.v_hi, "value"),
        ):
            if not (0.0 <= lo <= hi <= 1.0):
                raise ValueError(
                    f"{name} range [{lo}, {hi}] must satisfy 0 <= lo <= hi <= 1"
                )

    @classmethod
    def from_sequence(cls, values) -> "HsvRange":
        vals = [float(v) for v in values]
        if len(vals) != 6:
            raise ValueError("expected six values: h_lo,h_hi,s_lo,s_hi,v_lo,v_hi")
        return cls(*vals)


# Water palette on satellite map tiles: hue/saturation/value windows as
# fractions of full scale.
DEFAULT_WATER_RANGE = HsvRange(h_lo=0.399, h_hi=0.78, s_lo=0.32, s_hi=1.0, v_lo=0.2, v_hi=1.0)


def rgb_to_hsv(r: float, g: float, b: float) -> HsvPixel:
    """Convert one RGB pixel (channels in [0, 1]) to HSV.

    Hue follows the hexagonal case analysis on the dominant channel, wrapped
    into [0, 360); when max == min the hue is defined as 0 (saturation is 0
    there, so the choice never affects masking).
    """
    mx = max(r, g, b)
    mn = min(r, g, b)
    delta = mx - mn

    if delta == 0.0:
        h = 0.0
    elif mx == r:
        h = 60.0 * (g - b) / delta
        if g < b:
            h += 360.0
    elif mx == g:
        h = 60.0 * (b - r) / delta + 120.0
    else:  # mx == b
        h = 60.0 * (r - g) / delta + 240.0
    if h >= 360.0:  # the +360 wrap of a sub-ulp negative angle rounds to 360
        h -= 360.0

    s = 0.0 if mx == 0.0 else 1.0 - mn / mx
    return HsvPixel(h=h, s=s, v=mx)


def rgb_to_hsv_image(img: np.ndarray) -> np.ndarray:
    """Vectorized rgb_to_hsv over an (H, W, 3) image.

    Returns a float64 array of the same shape with channels (hue degrees,
    saturation, value). Agrees with the scalar function pixel for pixel.
    """
    img = np.asarray(img, dtype=np.float64)
    r, g, b = img[..., 0], img[..., 1], img[..., 2]
    mx = img.max(axis=-1)
    mn = img.min(axis=-1)
    delta = mx - mn
    safe_delta = np.where(delta > 0, delta, 1.0)

    h = np.select(
        [
            delta == 0,
            (mx == r) & (g >= b),
            mx == r,  # here g < b
            mx == g,
        ],
        [
            0.0,
            60.0 * (g - b) / safe_delta,
            60.0 * (g - b) / safe_delta + 360.0,
            60.0 * (b - r) / safe_delta + 120.0,
        ],
        default=60.0 * (r - g) / safe_delta + 240.0,
    )
    h = np.where(h >= 360.0, h - 360.0, h)

    safe_mx = np.where(mx > 0, mx, 1.0)
    s = np.where(mx > 0, 1.0 - mn / safe_mx, 0.0)
    return np.stack([h, s, mx], axis=-1)


def hsv_mask(img: np.ndarray, hsv_range: HsvRange = DEFAULT_WATER_RANGE) -> np.ndarray:
    """Binarize an RGB image: 1 where all three HSV channels fall inside
    the closed intervals of ``hsv_range``, 0 elsewhere."""
    hsv = rgb_to_hsv_image(img)
    h_frac = hsv[..., 0] / 360.0
    s = hsv[..., 1]
    v = hsv[..., 2]
    inside = (
        (h_frac >= hsv_range.h_lo)
        & (h_frac <= hsv_range.h_hi)
        & (s >= hsv_range.s_lo)
        & (s <= hsv_range.s_hi)
        & (v >= hsv_range.v_lo)
        & (v <= hsv_range.v_hi)
    )
    return inside.astype(np.uint8)
