from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest

FIXTURES = Path(__file__).parent / "fixtures"

# Must stay in sync with tests/fixtures/generate.py.
WATER_RGB = (40, 90, 200)
LAND_RGB = (150, 140, 90)


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def sample_map(fixtures_dir: Path) -> Path:
    return fixtures_dir / "sample_map.png"


@pytest.fixture
def sample_binding(fixtures_dir: Path) -> Path:
    return fixtures_dir / "sample.binding"


@pytest.fixture
def step_image(fixtures_dir: Path) -> Path:
    return fixtures_dir / "step.png"


@pytest.fixture
def land_image(fixtures_dir: Path) -> Path:
    return fixtures_dir / "land.png"


def make_map(height: int, width: int) -> np.ndarray:
    """All-land RGB canvas to paint water onto."""
    img = np.zeros((height, width, 3), np.uint8)
    img[:] = LAND_RGB
    return img


def paint_disc(img: np.ndarray, cx: int, cy: int, r: int, color=WATER_RGB) -> None:
    h, w = img.shape[:2]
    ys, xs = np.mgrid[0:h, 0:w]
    img[(xs - cx) ** 2 + (ys - cy) ** 2 <= r * r] = color


def save_rgb(img: np.ndarray, path: Path) -> Path:
    from PIL import Image

    Image.fromarray(img, "RGB").save(path)
    return path
