"""
Slicing an image into bit planes
================================

Every 8-bit pixel is a sum of eight weighted bits. Collecting one bit position
across the whole image gives a binary "bit plane". Plane 1 holds the most
significant bits and looks like a thresholded copy of the picture; plane 8
holds the least significant bits and looks like noise.
"""

import sys
from pathlib import Path

import numpy as np

from bitplane_wm import corpus, decompose, recompose

out_dir = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_output")
out_dir.mkdir(exist_ok=True)

cover = corpus.load_cover()
stack = decompose(cover)
print("stack shape:", stack.shape)

# how much of each plane is set, and how "structured" it is: the fraction of
# horizontally adjacent pixels that agree (0.5 means no structure at all)
for l, plane in enumerate(stack, start=1):
    agree = (plane[:, 1:] == plane[:, :-1]).mean()
    print(f"plane {l}: ones {plane.mean():.3f}  neighbour agreement {agree:.3f}")

# the eight planes put back together give the original pixels exactly
assert np.array_equal(recompose(stack), cover)

# dropping the two lowest planes changes each pixel by at most 3 grey levels
coarse = recompose(np.concatenate([stack[:6], np.zeros_like(stack[6:])]))
print("max change without planes 7-8:", int(np.abs(cover.astype(int) - coarse).max()))

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib not installed; skipping the figure")
else:
    fig, axes = plt.subplots(3, 3, figsize=(9, 9))
    axes[0, 0].imshow(cover, cmap="gray", vmin=0, vmax=255)
    axes[0, 0].set_title("cover")
    for l, ax in zip(range(1, 9), axes.flat[1:]):
        ax.imshow(stack[l - 1], cmap="gray", vmin=0, vmax=1)
        ax.set_title(f"plane {l}")
    for ax in axes.flat:
        ax.axis("off")
    fig.tight_layout()
    fig.savefig(out_dir / "bit_planes.png", dpi=80)
    print("wrote", out_dir / "bit_planes.png")
