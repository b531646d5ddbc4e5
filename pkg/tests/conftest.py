import math
import os

import numpy as np
import pytest

from cspacemap.geom import MultiPolygon

DATA = os.path.join(os.path.dirname(__file__), "data")


def data_path(name: str) -> str:
    return os.path.join(DATA, name)


def star_polygon(rng, n: int, cx: float = 0.0, cy: float = 0.0,
                 scale: float = 1.0) -> MultiPolygon:
    """Random simple star-shaped polygon around (cx, cy)."""
    gaps = rng.uniform(0.5, 1.5, n)
    angles = np.cumsum(gaps) / np.sum(gaps) * 2 * np.pi
    radii = rng.uniform(0.45, 1.4, n) * scale
    return MultiPolygon.from_coords(
        [(cx + r * math.cos(a), cy + r * math.sin(a)) for r, a in zip(radii, angles)]
    )


def random_box(rng, lo=-10.0, hi=10.0, min_side=0.05) -> MultiPolygon:
    x = np.sort(rng.uniform(lo, hi, 2))
    y = np.sort(rng.uniform(lo, hi, 2))
    while x[1] - x[0] < min_side:
        x = np.sort(rng.uniform(lo, hi, 2))
    while y[1] - y[0] < min_side:
        y = np.sort(rng.uniform(lo, hi, 2))
    return MultiPolygon.box(x[0], y[0], x[1], y[1])


def vertex_set(mp: MultiPolygon, ndigits: int = 9) -> set:
    return {(round(p.x, ndigits), round(p.y, ndigits)) for p in mp.vertices()}


@pytest.fixture
def rng():
    return np.random.default_rng(0xC5)
