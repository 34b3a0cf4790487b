"""The ten robustness attacks used to score a watermarked image.

Every attack keeps the canvas size, so a plane can still be read back at the
same pixel positions afterwards. All of them are deterministic: pixel maths is
integer-only except for the rotation coordinates and the compression DCT,
which use doubles and round half up at the end.

The canonical order below is the order of the per-attack CRC vector and of
the weights in a :class:`~bitplane_wm.metrics.WeightProfile`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .prng import raw_words, uniform01
from .raster import as_gray

ANGLE_ROTATION = "angle-rotation"
ROTATE_TRANSFORM = "rotate-transform"
CROP = "crop"
LOW_PASS = "low-pass"
QUANTIZATION = "quantization"
TRANSLATION = "translation"
CONTRAST_STRETCH = "contrast-stretch"
SALT_PEPPER = "salt-pepper"
COMPRESSION = "compression"
SHRINK = "shrink"

ATTACK_ORDER = (
    ANGLE_ROTATION,
    ROTATE_TRANSFORM,
    CROP,
    LOW_PASS,
    QUANTIZATION,
    TRANSLATION,
    CONTRAST_STRETCH,
    SALT_PEPPER,
    COMPRESSION,
    SHRINK,
)

# default ("paper profile") parameters; every value is overridable
DEFAULT_PARAMS = {
    ANGLE_ROTATION: {"angle": 5.0},
    ROTATE_TRANSFORM: {"angle": 5.0},
    CROP: {"fraction": 0.41},
    LOW_PASS: {"size": 3},
    QUANTIZATION: {"step": 4},
    TRANSLATION: {"dx": 5, "dy": 5},
    CONTRAST_STRETCH: {},
    SALT_PEPPER: {"density": 0.02},
    COMPRESSION: {"quality": 75},
    SHRINK: {"factor": 2},
}

DEFAULT_SEED = 42


def _require_int(name, value, lo=None, hi=None):
    if isinstance(value, bool) or not float(value).is_integer():
        raise ValueError(f"{name} must be an integer, got {value!r}")
    value = int(value)
    if (lo is not None and value < lo) or (hi is not None and value > hi):
        raise ValueError(f"{name}={value} outside [{lo}, {hi}]")
    return value


def _require_real(name, value, lo=None, hi=None):
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite")
    if (lo is not None and value < lo) or (hi is not None and value > hi):
        raise ValueError(f"{name}={value} outside [{lo}, {hi}]")
    return value


@dataclass(frozen=True)
class AttackSpec:
    """An attack kind with its parameters.

    Missing parameters take the values in ``DEFAULT_PARAMS``; ``seed`` only
    matters for ``salt-pepper``.
    """

    kind: str
    params: dict = field(default_factory=dict)
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        if self.kind not in DEFAULT_PARAMS:
            raise ValueError(f"unknown attack kind {self.kind!r}")
        unknown = set(self.params) - set(DEFAULT_PARAMS[self.kind])
        if unknown:
            raise ValueError(f"{self.kind}: unknown parameter(s) {sorted(unknown)}")
        _require_int("seed", self.seed, lo=0)
        merged = {**DEFAULT_PARAMS[self.kind], **self.params}
        object.__setattr__(self, "params", _validate(self.kind, merged))

    def to_dict(self) -> dict:
        return {"kind": self.kind, **self.params, "seed": self.seed}

    @classmethod
    def from_dict(cls, d: dict) -> "AttackSpec":
        d = dict(d)
        try:
            kind = d.pop("kind")
        except KeyError:
            raise ValueError("attack entry lacks a 'kind'") from None
        seed = d.pop("seed", DEFAULT_SEED)
        return cls(kind, d, seed)


def _validate(kind, p):
    if kind in (ANGLE_ROTATION, ROTATE_TRANSFORM):
        return {"angle": _require_real("angle", p["angle"], -360.0, 360.0)}
    if kind == CROP:
        return {"fraction": _require_real("fraction", p["fraction"], 0.0, 1.0)}
    if kind == LOW_PASS:
        size = _require_int("size", p["size"], 1, 31)
        if size % 2 == 0:
            raise ValueError("low-pass size must be odd")
        return {"size": size}
    if kind == QUANTIZATION:
        return {"step": _require_int("step", p["step"], 1, 255)}
    if kind == TRANSLATION:
        return {"dx": _require_int("dx", p["dx"]), "dy": _require_int("dy", p["dy"])}
    if kind == CONTRAST_STRETCH:
        return {}
    if kind == SALT_PEPPER:
        return {"density": _require_real("density", p["density"], 0.0, 1.0)}
    if kind == COMPRESSION:
        return {"quality": _require_int("quality", p["quality"], 1, 100)}
    if kind == SHRINK:
        return {"factor": _require_int("factor", p["factor"], 1, 64)}
    raise ValueError(f"unknown attack kind {kind!r}")


def default_attacks(seed: int = DEFAULT_SEED) -> list[AttackSpec]:
    """The ten attacks in canonical order with default parameters."""
    return [AttackSpec(kind, seed=seed) for kind in ATTACK_ORDER]


def identity_attacks() -> list[AttackSpec]:
    """Ten no-op attacks (zero-density salt and pepper), handy for pipeline checks."""
    return [AttackSpec(SALT_PEPPER, {"density": 0.0}) for _ in ATTACK_ORDER]


def _round_half_up(x):
    return np.floor(x + 0.5)


def rotate(img, angle: float) -> np.ndarray:
    """Rotate counter-clockwise (as displayed) by ``angle`` degrees about the
    image centre. Nearest-neighbour sampling; pixels with no source are 0.
    """
    img = as_gray(img)
    h, w = img.shape
    theta = math.radians(angle)
    cos_t, sin_t = math.cos(theta), math.sin(theta)
    cy, cx = (h - 1) / 2.0, (w - 1) / 2.0
    rows, cols = np.mgrid[0:h, 0:w]
    dy = rows - cy
    dx = cols - cx
    src_x = _round_half_up(cx + dx * cos_t - dy * sin_t).astype(np.int64)
    src_y = _round_half_up(cy + dx * sin_t + dy * cos_t).astype(np.int64)
    inside = (src_x >= 0) & (src_x < w) & (src_y >= 0) & (src_y < h)
    out = np.zeros_like(img)
    out[inside] = img[src_y[inside], src_x[inside]]
    return out


def crop(img, fraction: float) -> np.ndarray:
    """Blank a centred horizontal band covering ``fraction`` of the rows."""
    img = as_gray(img)
    h = img.shape[0]
    band = int(math.floor(fraction * h + 0.5))
    start = (h - band) // 2
    out = img.copy()
    out[start:start + band, :] = 0
    return out


def low_pass(img, size: int) -> np.ndarray:
    img = as_gray(img)
    r = size // 2
    padded = np.pad(img.astype(np.int64), r, mode="edge")
    sums = sliding_window_view(padded, (size, size)).sum(axis=(-2, -1))
    n = size * size
    return ((sums + n // 2) // n).astype(np.uint8)


def quantize(img, step: int) -> np.ndarray:
    img = as_gray(img).astype(np.int64)
    return (step * (img // step)).astype(np.uint8)


def translate(img, dx: int, dy: int) -> np.ndarray:
    """Shift content right by ``dx`` and down by ``dy``; vacated pixels are 0."""
    img = as_gray(img)
    h, w = img.shape
    out = np.zeros_like(img)
    if abs(dx) >= w or abs(dy) >= h:
        return out
    src_r = slice(max(0, -dy), h - max(0, dy))
    src_c = slice(max(0, -dx), w - max(0, dx))
    dst_r = slice(max(0, dy), h - max(0, -dy))
    dst_c = slice(max(0, dx), w - max(0, -dx))
    out[dst_r, dst_c] = img[src_r, src_c]
    return out


def contrast_stretch(img) -> np.ndarray:
    img = as_gray(img)
    lo, hi = int(img.min()), int(img.max())
    if lo == hi:
        return img.copy()
    span = hi - lo
    # round half up of (p - lo) * 255 / span, in integers
    num = (img.astype(np.int64) - lo) * 510 + span
    return (num // (2 * span)).astype(np.uint8)


def salt_pepper(img, density: float, seed: int) -> np.ndarray:
    """Each pixel becomes 0 or 255 (equally likely) with probability ``density``.

    Two PCG64 words are drawn per pixel in row-major order: the first decides
    whether the pixel is hit, the top bit of the second picks salt (1) or
    pepper (0).
    """
    img = as_gray(img)
    words = raw_words(seed, 2 * img.size).reshape(img.size, 2)
    hit = (uniform01(words[:, 0]) < density).reshape(img.shape)
    salt = (words[:, 1] >> np.uint64(63)).astype(bool).reshape(img.shape)
    out = img.copy()
    out[hit & salt] = 255
    out[hit & ~salt] = 0
    return out


LUMINANCE_TABLE = np.array([
    [16, 11, 10, 16, 24, 40, 51, 61],
    [12, 12, 14, 19, 26, 58, 60, 55],
    [14, 13, 16, 24, 40, 57, 69, 56],
    [14, 17, 22, 29, 51, 87, 80, 62],
    [18, 22, 37, 56, 68, 109, 103, 77],
    [24, 35, 55, 64, 81, 104, 113, 92],
    [49, 64, 78, 87, 103, 121, 120, 101],
    [72, 92, 95, 98, 112, 100, 103, 99],
], dtype=np.int64)


def quality_table(quality: int) -> np.ndarray:
    """Luminance quantisation table scaled with the usual IJG quality rule."""
    quality = _require_int("quality", quality, 1, 100)
    scale = 5000 // quality if quality < 50 else 200 - 2 * quality
    table = (LUMINANCE_TABLE * scale + 50) // 100
    return np.clip(table, 1, 255)


def _dct_matrix(n=8):
    k = np.arange(n).reshape(-1, 1)
    x = np.arange(n).reshape(1, -1)
    m = np.cos((2 * x + 1) * k * np.pi / (2 * n)) * math.sqrt(2.0 / n)
    m[0, :] = math.sqrt(1.0 / n)
    return m


_DCT8 = _dct_matrix()


def jpeg_compress(img, quality: int) -> np.ndarray:
    """Lossy 8x8 block-DCT round trip at a JPEG quality factor (no entropy coding)."""
    img = as_gray(img)
    h, w = img.shape
    ph, pw = -h % 8, -w % 8
    x = np.pad(img, ((0, ph), (0, pw)), mode="edge").astype(np.float64) - 128.0
    H, W = x.shape
    blocks = x.reshape(H // 8, 8, W // 8, 8).transpose(0, 2, 1, 3)
    coeffs = _DCT8 @ blocks @ _DCT8.T
    q = quality_table(quality).astype(np.float64)
    # quantiser rounds half away from zero
    levels = np.sign(coeffs / q) * np.floor(np.abs(coeffs / q) + 0.5)
    rec = _DCT8.T @ (levels * q) @ _DCT8
    rec = rec.transpose(0, 2, 1, 3).reshape(H, W) + 128.0
    out = np.clip(_round_half_up(rec), 0, 255).astype(np.uint8)
    return out[:h, :w]


def shrink(img, factor: int) -> np.ndarray:
    """Downscale by block averaging, then blow back up by pixel replication."""
    img = as_gray(img)
    if factor == 1:
        return img.copy()
    h, w = img.shape
    x = np.pad(img, ((0, -h % factor), (0, -w % factor)), mode="edge").astype(np.int64)
    H, W = x.shape
    n = factor * factor
    sums = x.reshape(H // factor, factor, W // factor, factor).sum(axis=(1, 3))
    small = (sums + n // 2) // n
    big = np.repeat(np.repeat(small, factor, axis=0), factor, axis=1)
    return big[:h, :w].astype(np.uint8)


def apply_attack(img, spec: AttackSpec) -> np.ndarray:
    p = spec.params
    kind = spec.kind
    if kind == ANGLE_ROTATION:
        return rotate(img, p["angle"])
    if kind == ROTATE_TRANSFORM:
        return rotate(rotate(img, p["angle"]), -p["angle"])
    if kind == CROP:
        return crop(img, p["fraction"])
    if kind == LOW_PASS:
        return low_pass(img, p["size"])
    if kind == QUANTIZATION:
        return quantize(img, p["step"])
    if kind == TRANSLATION:
        return translate(img, p["dx"], p["dy"])
    if kind == CONTRAST_STRETCH:
        return contrast_stretch(img)
    if kind == SALT_PEPPER:
        return salt_pepper(img, p["density"], spec.seed)
    if kind == COMPRESSION:
        return jpeg_compress(img, p["quality"])
    if kind == SHRINK:
        return shrink(img, p["factor"])
    raise ValueError(f"unknown attack kind {kind!r}")
