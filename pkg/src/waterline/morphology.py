"""Binary morphology and connected-component labeling.

Dilation and erosion are neighborhood max/min over a structuring element,
with reads outside the image treated as 0. The cleanup step is a closing
(dilate then erode by default) followed by removal of small 8-connected
components.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy import ndimage

_EIGHT_CONNECTED = np.ones((3, 3), dtype=int)


@dataclass(frozen=True)
class StructuringElement:
    """Odd-sized binary stencil; the anchor is the center cell and must be set."""

    bits: np.ndarray

    def __post_init__(self):
        bits = np.asarray(self.bits, dtype=np.uint8)
        object.__setattr__(self, "bits", bits)
        h, w = bits.shape
        if h % 2 == 0 or w % 2 == 0 or h < 1 or w < 1:
            raise ValueError(f"structuring element must have odd dimensions, got {h}x{w}")
        if not bits.any():
            raise ValueError("structuring element must contain at least one set bit")
        if bits[h // 2, w // 2] != 1:
            raise ValueError("structuring element anchor (center) must be set")

    @property
    def height(self) -> int:
        return self.bits.shape[0]

    @property
    def width(self) -> int:
        return self.bits.shape[1]

    @classmethod
    def square(cls, size: int = 3) -> "StructuringElement":
        """Full size x size square (size odd)."""
        return cls(np.ones((size, size), dtype=np.uint8))


DEFAULT_SE = StructuringElement.square(3)


@dataclass
class LabelMap:
    """8-connected component labels 1..region_count in raster-scan order of
    first encounter; 0 is background."""

    labels: np.ndarray
    region_count: int

    areas: np.ndarray = field(init=False)

    def __post_init__(self):
        counts = np.bincount(self.labels.ravel(), minlength=self.region_count + 1)
        self.areas = counts[1 : self.region_count + 1]


def _neighborhood_reduce(mask: np.ndarray, se: StructuringElement, op) -> np.ndarray:
    """Slide ``se`` over ``mask`` accumulating ``op`` (OR for max, AND for min)
    across the set offsets; out-of-bounds reads are 0."""
    mask = np.asarray(mask, dtype=np.uint8)
    h, w = mask.shape
    sh, sw = se.height, se.width
    padded = np.zeros((h + sh - 1, w + sw - 1), dtype=np.uint8)
    padded[sh // 2 : sh // 2 + h, sw // 2 : sw // 2 + w] = mask

    out = None
    for i, j in zip(*np.nonzero(se.bits)):
        window = padded[i : i + h, j : j + w]
        if out is None:
            out = window.copy()
        else:
            op(out, window, out=out)
    return out


def dilate(mask: np.ndarray, se: StructuringElement = DEFAULT_SE) -> np.ndarray:
    """Local maximum over the structuring-element neighborhood."""
    return _neighborhood_reduce(mask, se, np.maximum)


def erode(mask: np.ndarray, se: StructuringElement = DEFAULT_SE) -> np.ndarray:
    """Local minimum over the structuring-element neighborhood.

    Zero padding means foreground touching the frame is eroded away, which
    keeps downstream boundaries closed.
    """
    return _neighborhood_reduce(mask, se, np.minimum)


def label_components(mask: np.ndarray) -> LabelMap:
    """Label 8-connected foreground components 1..n, numbered by raster-scan
    order of each component's first pixel."""
    mask = np.asarray(mask, dtype=np.uint8)
    raw, count = ndimage.label(mask, structure=_EIGHT_CONNECTED)
    if count == 0:
        return LabelMap(labels=np.zeros_like(mask, dtype=np.int32), region_count=0)

    # scipy's numbering is an implementation detail; renumber by first
    # raster-scan occurrence so output order is part of the contract.
    flat = raw.ravel()
    present, first_index = np.unique(flat, return_index=True)
    nonzero = present != 0
    order = present[nonzero][np.argsort(first_index[nonzero])]
    remap = np.zeros(count + 1, dtype=np.int32)
    remap[order] = np.arange(1, count + 1)
    return LabelMap(labels=remap[raw], region_count=count)


def drop_small(mask: np.ndarray, min_area: int) -> np.ndarray:
    """Zero every 8-connected component whose area is below ``min_area``."""
    if min_area <= 0:
        return np.asarray(mask, dtype=np.uint8).copy()
    lm = label_components(mask)
    if lm.region_count == 0:
        return np.asarray(mask, dtype=np.uint8).copy()
    keep = np.concatenate(([False], lm.areas >= min_area))
    return keep[lm.labels].astype(np.uint8)


def clean(
    mask: np.ndarray,
    se: StructuringElement = DEFAULT_SE,
    min_area: int = 50,
    dilate_first: bool = True,
) -> np.ndarray:
    """Noise cleanup: closing (or opening when ``dilate_first`` is False)
    followed by small-component removal."""
    if dilate_first:
        closed = erode(dilate(mask, se), se)
    else:
        closed = dilate(erode(mask, se), se)
    return drop_small(closed, min_area)
