"""Grayscale raster helpers and a binary PGM (P5) codec.

Images are plain 2-D ``uint8`` numpy arrays indexed ``[row, column]`` with
the origin at the top-left corner. Everything else in the package accepts and
returns that representation.
"""

from __future__ import annotations

import os

import numpy as np


class PGMError(ValueError):
    """Raised when a byte stream is not a PGM this codec understands."""


class MalformedHeaderError(PGMError):
    pass


class UnsupportedMaxvalError(PGMError):
    pass


class TruncatedPayloadError(PGMError):
    pass


def as_gray(img, name="image") -> np.ndarray:
    """Validate ``img`` as an 8-bit grayscale raster and return it as uint8.

    Integer arrays with values in 0..255 are accepted and converted; anything
    else (floats, wrong rank, empty, out of range) raises ``ValueError``.
    """
    arr = np.asarray(img)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 2-D, got shape {arr.shape}")
    if arr.shape[0] == 0 or arr.shape[1] == 0:
        raise ValueError(f"{name} must have positive width and height")
    if arr.dtype == np.uint8:
        return arr
    if arr.dtype.kind not in "iub":
        raise ValueError(f"{name} must hold integers, got dtype {arr.dtype}")
    if arr.min() < 0 or arr.max() > 255:
        raise ValueError(f"{name} intensities must lie in [0, 255]")
    return arr.astype(np.uint8)


def _read_token(data: bytes, pos: int) -> tuple[bytes, int]:
    n = len(data)
    while pos < n:
        c = data[pos:pos + 1]
        if c == b"#":
            while pos < n and data[pos:pos + 1] not in (b"\n", b"\r"):
                pos += 1
        elif c.isspace():
            pos += 1
        else:
            break
    start = pos
    while pos < n and not data[pos:pos + 1].isspace() and data[pos:pos + 1] != b"#":
        pos += 1
    if start == pos:
        raise MalformedHeaderError("unexpected end of header")
    return data[start:pos], pos


def load_pgm(data: bytes) -> np.ndarray:
    """Decode a binary PGM (magic ``P5``, maxval 255) into a uint8 array."""
    if not data.startswith(b"P5"):
        raise MalformedHeaderError("not a binary PGM (missing P5 magic)")
    pos = 2
    fields = []
    for label in ("width", "height", "maxval"):
        tok, pos = _read_token(data, pos)
        if not tok.isdigit():
            raise MalformedHeaderError(f"bad {label} field {tok!r}")
        fields.append(int(tok))
    width, height, maxval = fields
    if width <= 0 or height <= 0:
        raise MalformedHeaderError(f"bad dimensions {width}x{height}")
    if maxval != 255:
        raise UnsupportedMaxvalError(f"unsupported maxval {maxval}")
    # exactly one whitespace byte separates the header from the raster
    if pos >= len(data) or not data[pos:pos + 1].isspace():
        raise MalformedHeaderError("missing whitespace after maxval")
    pos += 1
    size = width * height
    payload = data[pos:pos + size]
    if len(payload) < size:
        raise TruncatedPayloadError(
            f"truncated payload: expected {size} bytes, got {len(payload)}")
    return np.frombuffer(payload, dtype=np.uint8).reshape(height, width).copy()


def save_pgm(img) -> bytes:
    img = as_gray(img)
    height, width = img.shape
    header = f"P5\n{width} {height}\n255\n".encode("ascii")
    return header + np.ascontiguousarray(img).tobytes()


def read_pgm(path: str | os.PathLike) -> np.ndarray:
    with open(path, "rb") as fh:
        return load_pgm(fh.read())


def write_pgm(path: str | os.PathLike, img) -> None:
    with open(path, "wb") as fh:
        fh.write(save_pgm(img))
