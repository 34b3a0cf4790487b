"""Similarity and fidelity measures: CRC, MSE, PSNR and weighted CRC."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

N_ATTACKS = 10
WEIGHT_TOLERANCE = 1e-9


def _binary(plane, name):
    arr = np.asarray(plane)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 2-D, got shape {arr.shape}")
    if arr.dtype.kind not in "iub":
        raise ValueError(f"{name} must be an integer bit plane")
    if arr.size and (arr.min() < 0 or arr.max() > 1):
        raise ValueError(f"{name} is not binary")
    return arr.astype(np.int64)


def crc(w, w_star) -> float:
    """Correlation coefficient between an original and a retrieved bit plane.

    ``sum(w * w*) / sqrt(sum(w) * sum(w*))``. Because the planes are binary,
    ``w**2 == w`` and this is the usual normalised cross-correlation, so the
    value lies in [0, 1]. If exactly one plane is empty the result is 0; two
    empty planes match trivially and give 1.
    """
    a = _binary(w, "w")
    b = _binary(w_star, "w_star")
    if a.shape != b.shape:
        raise ValueError(f"plane shapes differ: {a.shape} vs {b.shape}")
    sa, sb = int(a.sum()), int(b.sum())
    if sa == 0 and sb == 0:
        return 1.0
    if sa == 0 or sb == 0:
        return 0.0
    return int((a * b).sum()) / math.sqrt(sa * sb)


def mse(a, b) -> float:
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise ValueError(f"shapes differ: {a.shape} vs {b.shape}")
    diff = a.astype(np.int64) - b.astype(np.int64)
    return float((diff * diff).sum()) / diff.size


def psnr(a, b) -> float:
    """PSNR in dB against a 255 peak; ``math.inf`` when the inputs are equal."""
    err = mse(a, b)
    if err == 0:
        return math.inf
    return 10.0 * math.log10(255.0 ** 2 / err)


@dataclass(frozen=True)
class WeightProfile:
    """Ten non-negative attack weights, in canonical attack order, summing to 1."""

    name: str
    weights: tuple

    def __post_init__(self):
        w = tuple(float(x) for x in self.weights)
        if len(w) != N_ATTACKS:
            raise ValueError(f"profile {self.name!r} needs {N_ATTACKS} weights, got {len(w)}")
        if any(not math.isfinite(x) or x < 0 for x in w):
            raise ValueError(f"profile {self.name!r} has a negative or non-finite weight")
        if abs(math.fsum(w) - 1.0) > WEIGHT_TOLERANCE:
            raise ValueError(f"profile {self.name!r} weights sum to {math.fsum(w)}, not 1")
        object.__setattr__(self, "weights", w)

    def to_dict(self) -> dict:
        return {"name": self.name, "weights": list(self.weights)}


# weight vectors of the four user requirements in the reference weighted-CRC table
_TABLE1_DECIMALS = {
    "table1-p1": ["0.1"] * 10,
    "table1-p2": ["0.05"] * 6 + ["0.2", "0.2", "0.2", "0.1"],
    "table1-p3": ["0.025", "0.05", "0.025", "0.025", "0.025",
                  "0.05", "0.1", "0.4", "0.1", "0.2"],
    "table1-p4": ["0.025", "0.025", "0.05", "0.05", "0.05",
                  "0.05", "0.05", "0.2", "0.3", "0.2"],
}

PRESETS = {
    name: WeightProfile(name, tuple(float(x) for x in ws))
    for name, ws in _TABLE1_DECIMALS.items()
}


def preset_fractions(name: str) -> tuple:
    """The exact rational weights behind a preset."""
    return tuple(Fraction(x) for x in _TABLE1_DECIMALS[name])


def get_profile(spec) -> WeightProfile:
    """Accept a preset name, a WeightProfile, or a ``{"name", "weights"}`` mapping."""
    if isinstance(spec, WeightProfile):
        return spec
    if isinstance(spec, str):
        try:
            return PRESETS[spec]
        except KeyError:
            raise ValueError(
                f"unknown profile {spec!r}; presets are {sorted(PRESETS)}") from None
    if isinstance(spec, dict):
        return WeightProfile(str(spec.get("name", "custom")), tuple(spec["weights"]))
    raise ValueError(f"cannot interpret {spec!r} as a weight profile")


def weighted_crc(crcs, profile: WeightProfile) -> float:
    crcs = [float(c) for c in crcs]
    if len(crcs) != N_ATTACKS:
        raise ValueError(f"expected {N_ATTACKS} CRC values, got {len(crcs)}")
    if not isinstance(profile, WeightProfile):
        profile = get_profile(profile)
    return math.fsum(c * a for c, a in zip(crcs, profile.weights))
