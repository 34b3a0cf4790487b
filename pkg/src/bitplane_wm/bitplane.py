"""Bit-plane slicing, plane-replacement embedding and blind extraction.

Planes are numbered the way watermarking papers usually draw them: plane 1
is the most significant bit (weight 128) and plane 8 the least significant
(weight 1). A plane is a uint8 array of zeros and ones with the same shape as
the image it came from; a stack is an ``(8, H, W)`` array ordered plane 1..8.
"""

from __future__ import annotations

import numpy as np

from .prng import random_bits
from .raster import as_gray

N_PLANES = 8


def check_plane_index(index, name="plane") -> int:
    if isinstance(index, bool) or int(index) != index or not 1 <= index <= N_PLANES:
        raise ValueError(f"{name} index must be an integer in 1..8, got {index!r}")
    return int(index)


def plane_weight(index: int) -> int:
    """Intensity contributed by a set bit in plane ``index``."""
    return 1 << (N_PLANES - check_plane_index(index))


def decompose(img) -> np.ndarray:
    """Split an image into its eight bit planes, MSB first."""
    img = as_gray(img)
    shifts = np.arange(N_PLANES - 1, -1, -1, dtype=np.uint8).reshape(-1, 1, 1)
    return (img[None, :, :] >> shifts) & np.uint8(1)


def recompose(stack) -> np.ndarray:
    """Inverse of :func:`decompose`."""
    stack = np.asarray(stack)
    if stack.ndim != 3 or stack.shape[0] != N_PLANES:
        raise ValueError(
            f"expected a stack of 8 equally sized planes, got shape {stack.shape}")
    if stack.size and (stack.min() < 0 or stack.max() > 1):
        raise ValueError("plane stack must be binary")
    weights = (1 << np.arange(N_PLANES - 1, -1, -1)).reshape(-1, 1, 1)
    return (stack.astype(np.int64) * weights).sum(axis=0).astype(np.uint8)


def extract_plane(img, index: int) -> np.ndarray:
    """Return plane ``index`` of ``img``; this is the blind retrieval step."""
    index = check_plane_index(index)
    img = as_gray(img)
    return (img >> np.uint8(N_PLANES - index)) & np.uint8(1)


def embed(cover, watermark, image_plane: int, watermark_plane: int) -> np.ndarray:
    """Replace plane ``image_plane`` of the cover by plane ``watermark_plane``
    of the watermark. Every other cover plane is left untouched.
    """
    cover = as_gray(cover, "cover")
    watermark = as_gray(watermark, "watermark")
    if cover.shape != watermark.shape:
        raise ValueError(
            f"cover {cover.shape} and watermark {watermark.shape} differ in size")
    l = check_plane_index(image_plane, "image plane")
    bits = extract_plane(watermark, watermark_plane)
    shift = N_PLANES - l
    cleared = cover & np.uint8(0xFF ^ (1 << shift))
    return cleared | (bits << np.uint8(shift))


def embed_plane(cover, bits, image_plane: int) -> np.ndarray:
    """Write an explicit binary plane into plane ``image_plane`` of the cover."""
    cover = as_gray(cover, "cover")
    bits = np.asarray(bits)
    if bits.shape != cover.shape:
        raise ValueError(f"plane {bits.shape} and cover {cover.shape} differ in size")
    if bits.size and (bits.min() < 0 or bits.max() > 1):
        raise ValueError("plane must be binary")
    # the watermark image whose LSB plane is `bits`
    return embed(cover, as_gray(bits, "plane"), image_plane, N_PLANES)


def pseudorandom_plane(seed: int, width: int, height: int) -> np.ndarray:
    """Bernoulli(0.5) noise plane, identical for a given seed on every platform."""
    if width <= 0 or height <= 0:
        raise ValueError("plane dimensions must be positive")
    return random_bits(seed, (height, width))
