"""Raster file loading and diagnostic mask output.

Loaded images are float64 arrays of shape (H, W, 3) with channels scaled to
[0, 1] by dividing by the file's full-scale value (255 for 8-bit). Alpha
channels and palettes are resolved to plain RGB; masks are written as
lossless grayscale PNG so that a save/load round trip is bit exact.
"""

from __future__ import annotations

import io
from pathlib import Path

import numpy as np
from PIL import Image, UnidentifiedImageError

from .errors import CorruptImageError, UnsupportedFormatError


def load_image(path: str | Path) -> np.ndarray:
    """Load a raster file into an (H, W, 3) float array in [0, 1].

    Raises FileNotFoundError for a missing path, UnsupportedFormatError for
    undecodable formats, CorruptImageError for truncated or damaged data.
    """
    path = Path(path)
    try:
        img = Image.open(path)
    except FileNotFoundError:
        raise
    except UnidentifiedImageError as exc:
        raise UnsupportedFormatError(f"{path}: not a recognized raster format") from exc
    try:
        img = img.convert("RGB")
        arr = np.asarray(img, dtype=np.float64)
    except (OSError, SyntaxError) as exc:
        raise CorruptImageError(f"{path}: {exc}") from exc
    return arr / 255.0


def save_mask(mask: np.ndarray, path: str | Path) -> None:
    """Write a {0,1} mask as a grayscale PNG (0 -> black, 1 -> white)."""
    data = (np.asarray(mask, dtype=np.uint8) * 255).astype(np.uint8)
    Image.fromarray(data, mode="L").save(path, format="PNG")


def load_mask(path: str | Path) -> np.ndarray:
    """Read a grayscale mask raster back into a {0,1} uint8 array."""
    with Image.open(path) as img:
        data = np.asarray(img.convert("L"))
    return (data > 127).astype(np.uint8)


def mask_to_png_bytes(mask: np.ndarray) -> bytes:
    """Encode a {0,1} mask as PNG bytes (for service responses)."""
    data = (np.asarray(mask, dtype=np.uint8) * 255).astype(np.uint8)
    buf = io.BytesIO()
    Image.fromarray(data, mode="L").save(buf, format="PNG")
    return buf.getvalue()


def image_from_bytes(data: bytes) -> np.ndarray:
    """Decode raster bytes (uploads) into the same [0, 1] representation
    as load_image."""
    try:
        img = Image.open(io.BytesIO(data))
    except UnidentifiedImageError as exc:
        raise UnsupportedFormatError("upload is not a recognized raster format") from exc
    try:
        img = img.convert("RGB")
        arr = np.asarray(img, dtype=np.float64)
    except (OSError, SyntaxError) as exc:
        raise CorruptImageError(f"upload: {exc}") from exc
    return arr / 255.0
