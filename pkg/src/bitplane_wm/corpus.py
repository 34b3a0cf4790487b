"""Bundled test corpus: a 256x256 photographic cover and a signature watermark.

``cover.pgm`` is the classic cameraman photograph (as shipped with
scikit-image) reduced to 256x256 by 2x2 averaging. ``signature.pgm`` is the
output of :func:`synthetic_signature` with its defaults: dark handwriting-like
strokes on slightly noisy off-white paper, imitating a scanned signature.
"""

from __future__ import annotations

import math
from importlib import resources

import numpy as np

from .prng import raw_words
from .raster import load_pgm

SIGNATURE_SEED = 2009


def _read(name: str) -> np.ndarray:
    return load_pgm(resources.files(__package__).joinpath("data", name).read_bytes())


def load_cover() -> np.ndarray:
    return _read("cover.pgm")


def load_signature() -> np.ndarray:
    return _read("signature.pgm")


def _stroke_points(width, height):
    # a looping cursive line (prolate cycloid) with a wavy underline
    pts = []
    n = 2400
    for i in range(n):
        t = 2 * math.pi * 4.5 * i / n
        x = 0.10 * width + (0.78 * width) * (i / n) - 0.06 * width * math.sin(t)
        y = 0.42 * height - 0.16 * height * math.cos(t) * (0.8 + 0.2 * math.sin(t / 3))
        pts.append((x, y))
    for i in range(900):
        s = i / 900
        x = 0.14 * width + 0.74 * width * s
        y = 0.72 * height + 0.03 * height * math.sin(2 * math.pi * 1.5 * s)
        pts.append((x, y))
    # crossing stroke and a dot
    for i in range(300):
        s = i / 300
        pts.append((0.55 * width + 0.20 * width * s, 0.30 * height + 0.30 * height * s))
    return pts


def synthetic_signature(width: int = 256, height: int = 256, seed: int = SIGNATURE_SEED,
                        pen_radius: float = 2.2) -> np.ndarray:
    """Render a scanned-looking signature: black ink (0..24) on paper near 238, with
    per-pixel noise so the low-order bit planes carry texture while the MSB
    plane is essentially the ink mask.
    """
    ss = 4
    canvas = np.zeros((height * ss, width * ss), dtype=bool)
    r = pen_radius * ss
    ri = int(math.ceil(r))
    yy, xx = np.mgrid[-ri:ri + 1, -ri:ri + 1]
    disk = xx * xx + yy * yy <= r * r
    for x, y in _stroke_points(width, height):
        cx, cy = int(round(x * ss)), int(round(y * ss))
        y0, y1 = cy - ri, cy + ri + 1
        x0, x1 = cx - ri, cx + ri + 1
        if y0 < 0 or x0 < 0 or y1 > canvas.shape[0] or x1 > canvas.shape[1]:
            continue
        canvas[y0:y1, x0:x1] |= disk
    coverage = canvas.reshape(height, ss, width, ss).mean(axis=(1, 3))

    words = raw_words(seed, 2 * width * height).reshape(2, height, width)
    paper = 231 + (words[0] % np.uint64(16)).astype(np.int64)   # 231..246
    ink = (words[1] % np.uint64(25)).astype(np.int64)           # 0..24
    img = paper - (paper - ink) * coverage
    return np.clip(np.floor(img + 0.5), 0, 255).astype(np.uint8)
