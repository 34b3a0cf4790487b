"""
Picking the best plane combination
==================================

Sweep image planes 7 and 8 against all eight watermark planes, score each
pair under the four bundled weight profiles, and pick the best pair per
profile. A custom profile shows how a user who mostly fears compression
would weigh things.
"""

from bitplane_wm import PRESETS, WeightProfile, corpus, sweep
from bitplane_wm.report import fmt_real, table_order

cover = corpus.load_cover()
signature = corpus.load_signature()

jpeg_heavy = WeightProfile("jpeg-heavy", (0.02,) * 8 + (0.74, 0.10))
profiles = list(PRESETS.values()) + [jpeg_heavy]

report = sweep(cover, signature, profiles=profiles, workers=4)

names = [p.name for p in profiles]
print(f"{'':12s}" + "".join(f"{n:>12s}" for n in names) + f"{'PSNR dB':>10s}")
for rec in table_order(report.records):
    print(f"{rec.combination.label:12s}"
          + "".join(f"{rec.weighted[n]:12.4f}" for n in names)
          + f"{fmt_real(rec.fidelity_psnr):>10s}")

base = report.baseline
print(f"{'pseudo 8-8':12s}" + "".join(f"{base.weighted[n]:12.4f}" for n in names))

print()
for n in names:
    c = report.selections[n]
    print(f"{n:>12s}: best {c.label}")
