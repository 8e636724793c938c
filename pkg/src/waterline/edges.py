"""Gradient edge operators and contour tracing.

Axis convention: arrays are indexed [row, col] = [y, x]; gx is the response
along the horizontal (column) axis, gy along the vertical (row) axis with y
increasing downward. Sobel and Prewitt are 3x3 stencils evaluated with zero
padding; Roberts is a 2x2 cross anchored at the output pixel's own cell,
reading the cells below/right (zero padding on the far edges).

Contours are traced per 8-connected component by Moore-neighbor following,
starting at the topmost-then-leftmost boundary pixel and walking clockwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .morphology import label_components


class OperatorKind(str, Enum):
    SOBEL = "sobel"
    ROBERTS = "roberts"
    PREWITT = "prewitt"


# 3x3 kernels, rows top to bottom.
SOBEL_X = np.array([[-1, 0, 1], [-2, 0, 2], [-1, 0, 1]], dtype=np.int64)
SOBEL_Y = np.array([[-1, -2, -1], [0, 0, 0], [1, 2, 1]], dtype=np.int64)
PREWITT_X = np.array([[-1, 0, 1], [-1, 0, 1], [-1, 0, 1]], dtype=np.int64)
PREWITT_Y = np.array([[-1, -1, -1], [0, 0, 0], [1, 1, 1]], dtype=np.int64)


@dataclass
class GradientField:
    """Per-pixel integer gradient components."""

    gx: np.ndarray
    gy: np.ndarray

    @property
    def shape(self) -> tuple[int, int]:
        return self.gx.shape


@dataclass(frozen=True)
class Contour:
    """Ordered boundary pixels (x, y) of one component; consecutive points
    are 8-neighbors, and for closed contours so are the last and first."""

    points: tuple[tuple[int, int], ...]
    closed: bool = True

    def __len__(self) -> int:
        return len(self.points)


def convolve3(mask: np.ndarray, kernel: np.ndarray) -> np.ndarray:
    """3x3 linear filter response: the sum over the nine kernel weights of
    weight times the pixel under it, with zero padding."""
    mask = np.asarray(mask, dtype=np.int64)
    kernel = np.asarray(kernel, dtype=np.int64)
    if kernel.shape != (3, 3):
        raise ValueError(f"kernel must be 3x3, got {kernel.shape}")
    h, w = mask.shape
    padded = np.zeros((h + 2, w + 2), dtype=np.int64)
    padded[1 : 1 + h, 1 : 1 + w] = mask
    out = np.zeros((h, w), dtype=np.int64)
    for i in range(3):
        for j in range(3):
            weight = kernel[i, j]
            if weight != 0:
                out += weight * padded[i : i + h, j : j + w]
    return out


def _roberts(mask: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # 2x2 window at (y, x): own cell plus the cells below/right, far edges
    # padded with zeros.
    mask = np.asarray(mask, dtype=np.int64)
    h, w = mask.shape
    padded = np.zeros((h + 1, w + 1), dtype=np.int64)
    padded[:h, :w] = mask
    gx = padded[1 : 1 + h, 1 : 1 + w] - padded[:h, :w]
    gy = padded[1 : 1 + h, :w] - padded[:h, 1 : 1 + w]
    return gx, gy


def gradient(mask: np.ndarray, op: OperatorKind = OperatorKind.SOBEL) -> GradientField:
    """Gradient components under the selected operator."""
    op = OperatorKind(op)
    if op is OperatorKind.SOBEL:
        return GradientField(gx=convolve3(mask, SOBEL_X), gy=convolve3(mask, SOBEL_Y))
    if op is OperatorKind.PREWITT:
        return GradientField(gx=convolve3(mask, PREWITT_X), gy=convolve3(mask, PREWITT_Y))
    gx, gy = _roberts(mask)
    return GradientField(gx=gx, gy=gy)


def magnitude(field: GradientField) -> np.ndarray:
    """Euclidean gradient magnitude sqrt(gx^2 + gy^2)."""
    return np.hypot(field.gx.astype(np.float64), field.gy.astype(np.float64))


def direction(field: GradientField) -> np.ndarray:
    """Gradient direction in degrees, quadrant-resolved; NaN where the
    gradient vanishes."""
    gx = field.gx.astype(np.float64)
    gy = field.gy.astype(np.float64)
    angles = np.degrees(np.arctan2(gy, gx))
    angles[(field.gx == 0) & (field.gy == 0)] = np.nan
    return angles


def edge_mask(field: GradientField, threshold: float = 0.0) -> np.ndarray:
    """Binarize the gradient: 1 where magnitude strictly exceeds threshold."""
    if threshold < 0:
        raise ValueError("threshold must be >= 0")
    return (magnitude(field) > threshold).astype(np.uint8)


# Moore neighborhood in clockwise order starting west, as (dy, dx).
_MOORE = [(0, -1), (-1, -1), (-1, 0), (-1, 1), (0, 1), (1, 1), (1, 0), (1, -1)]
_MOORE_INDEX = {d: i for i, d in enumerate(_MOORE)}


def _moore_trace(is_fg, start: tuple[int, int], limit: int) -> list[tuple[int, int]]:
    """Moore-neighbor boundary following from ``start`` (the component's
    topmost-then-leftmost pixel, so its west neighbor is background).
    Returns boundary pixels as (y, x) in clockwise order.

    Each walk state is (pixel, backtrack cell). The walk is deterministic,
    so its orbit is eventually periodic; the loop stops when the state after
    the first step recurs, which handles one-pixel-wide spurs where the
    start pixel is re-entered from a different side than it was left.
    """
    sy, sx = start

    def step(cy: int, cx: int, by: int, bx: int):
        # Scan the Moore ring clockwise beginning just after the backtrack
        # cell; the first foreground pixel is the next boundary pixel and the
        # cell checked just before it becomes the new backtrack.
        idx = _MOORE_INDEX[(by - cy, bx - cx)]
        prev_y, prev_x = by, bx
        for k in range(1, 9):
            dy, dx = _MOORE[(idx + k) % 8]
            ny, nx = cy + dy, cx + dx
            if is_fg(ny, nx):
                return (ny, nx, prev_y, prev_x)
            prev_y, prev_x = ny, nx
        return None

    first = step(sy, sx, sy, sx - 1)
    if first is None:
        return [start]  # isolated pixel

    cycle: list[tuple[int, int]] = []
    state = first
    while True:
        cy, cx, by, bx = state
        cycle.append((cy, cx))
        if len(cycle) > limit:
            raise RuntimeError("contour tracing failed to terminate")
        state = step(cy, cx, by, bx)
        if state == first:
            break

    pivot = cycle.index(start)
    return cycle[pivot:] + cycle[:pivot]


def trace_contours(mask: np.ndarray) -> list[Contour]:
    """Trace the outer boundary of every 8-connected component as a closed
    clockwise contour, one per component in label order."""
    lm = label_components(mask)
    labels = lm.labels
    h, w = labels.shape
    if lm.region_count == 0:
        return []

    # Labels are numbered by raster-scan first encounter, so the first
    # occurrence of each label is its topmost-then-leftmost pixel.
    flat = labels.ravel()
    present, first_index = np.unique(flat, return_index=True)
    starts = {
        int(lab): (int(pos // w), int(pos % w))
        for lab, pos in zip(present, first_index)
        if lab != 0
    }

    contours = []
    for rid in range(1, lm.region_count + 1):
        def is_fg(y: int, x: int, _rid: int = rid) -> bool:
            return 0 <= y < h and 0 <= x < w and labels[y, x] == _rid

        path = _moore_trace(is_fg, starts[rid], limit=8 * int(lm.areas[rid - 1]) + 8)
        contours.append(Contour(points=tuple((x, y) for y, x in path), closed=True))
    return contours


@dataclass
class OperatorReport:
    """Edge statistics for one operator on one mask."""

    operator: OperatorKind
    edge_pixels: int
    mean_nonzero_magnitude: float
    peak_abs_gx: int
    peak_abs_gy: int
    edges: np.ndarray


def compare_operators(mask: np.ndarray) -> list[OperatorReport]:
    """Run all three operators on the same mask and collect comparable edge
    statistics plus each operator's threshold-0 edge raster."""
    reports = []
    for op in OperatorKind:
        field = gradient(mask, op)
        mag = magnitude(field)
        edges = (mag > 0).astype(np.uint8)
        nonzero = mag[mag > 0]
        reports.append(
            OperatorReport(
                operator=op,
                edge_pixels=int(edges.sum()),
                mean_nonzero_magnitude=float(nonzero.mean()) if nonzero.size else 0.0,
                peak_abs_gx=int(np.abs(field.gx).max()) if field.gx.size else 0,
                peak_abs_gy=int(np.abs(field.gy).max()) if field.gy.size else 0,
                edges=edges,
            )
        )
    return reports
