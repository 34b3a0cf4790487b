"""
Embedding a signature plane and reading it back
===============================================

The watermark is one bit plane of a signature image. It replaces one bit
plane of the cover. Reading it back needs only the plane index, not the
original cover.
"""

import numpy as np

from bitplane_wm import corpus, crc, embed, extract_plane, psnr

cover = corpus.load_cover()
signature = corpus.load_signature()

# the signature's MSB plane is a clean ink mask
wm_bits = extract_plane(signature, 1)
print(f"ink pixels in watermark plane 1: {(wm_bits == 0).sum()}")

# write it into each cover plane in turn: fidelity falls by about 6 dB per plane
for l in range(8, 0, -1):
    marked = embed(cover, signature, l, 1)
    back = extract_plane(marked, l)
    print(f"image plane {l}: PSNR {psnr(cover, marked):6.2f} dB, "
          f"CRC after retrieval {crc(wm_bits, back):.3f}")

# planes 7 and 8 are the usual choices: the damage is at most 2 grey levels
marked = embed(cover, signature, 7, 1)
print("largest pixel change at plane 7:", int(np.abs(marked.astype(int) - cover).max()))
