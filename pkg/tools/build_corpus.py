"""Regenerate the bundled corpus under src/bitplane_wm/data/.

Needs scikit-image (dev only) for the cameraman photograph.
"""

from pathlib import Path

import numpy as np
from skimage import data

from bitplane_wm.corpus import synthetic_signature
from bitplane_wm.raster import write_pgm

OUT = Path(__file__).resolve().parents[1] / "src" / "bitplane_wm" / "data"


def main():
    cam = data.camera().astype(np.int64)
    h, w = cam.shape
    cover = (cam.reshape(h // 2, 2, w // 2, 2).sum(axis=(1, 3)) + 2) // 4
    write_pgm(OUT / "cover.pgm", cover.astype(np.uint8))
    write_pgm(OUT / "signature.pgm", synthetic_signature())
    print("wrote", OUT / "cover.pgm", OUT / "signature.pgm")


if __name__ == "__main__":
    main()
