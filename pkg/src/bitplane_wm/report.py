"""JSON and CSV serialisation of evaluation records and optimisation reports.

Reals are written with exactly six decimals and an infinite PSNR is written
as the string ``"inf"``, so repeated runs give byte-identical files.
"""

from __future__ import annotations

import csv
import io
import json
import math

from .attacks import ATTACK_ORDER
from .optimizer import OptimizationReport

DECIMALS = 6


def fmt_real(x: float) -> str:
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    s = f"{x:.{DECIMALS}f}"
    return "0.000000" if s == "-0.000000" else s


def dumps(obj, indent: int = 2) -> str:
    """``json.dumps`` with fixed-precision reals and sorted keys."""
    return _dump(obj, indent, 0) + "\n"


def _dump(obj, indent, level):
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, int)):
        return json.dumps(obj)
    if isinstance(obj, float):
        return json.dumps(fmt_real(obj)) if math.isinf(obj) else fmt_real(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_dump(obj[k], indent, level + 1)}"
                 for k in sorted(obj)]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in obj):
            return "[" + ", ".join(_dump(x, indent, level + 1) for x in obj) + "]"
        items = [pad + _dump(x, indent, level + 1) for x in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def table_order(records):
    """Rows in the order of the reference table: l ascending, k descending."""
    return sorted(records, key=lambda r: (r.combination.image_plane,
                                          -r.combination.watermark_plane))


def report_to_dict(report: OptimizationReport, extra_provenance=None) -> dict:
    provenance = dict(report.provenance)
    provenance.update(extra_provenance or {})
    return {
        "attack_order": list(ATTACK_ORDER),
        "attacks": [a.to_dict() for a in report.attacks],
        "profiles": [p.to_dict() for p in report.profiles],
        "records": [r.to_dict() for r in table_order(report.records)],
        "selections": {
            name: {"image_plane": c.image_plane, "watermark_plane": c.watermark_plane,
                   "label": c.label}
            for name, c in report.selections.items()
        },
        "baseline": report.baseline.to_dict() if report.baseline else None,
        "provenance": provenance,
    }


def csv_header(profile_names) -> list:
    return (["combination"] + [f"crc_{k}" for k in ATTACK_ORDER]
            + ["fidelity_psnr"] + list(profile_names))


def report_to_csv(report: OptimizationReport) -> str:
    names = [p.name for p in report.profiles]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(csv_header(names))
    for rec in table_order(report.records):
        writer.writerow([rec.combination.label]
                        + [fmt_real(c) for c in rec.crcs]
                        + [fmt_real(rec.fidelity_psnr)]
                        + [fmt_real(rec.weighted[n]) for n in names])
    return buf.getvalue()


def parse_real(s: str) -> float:
    return math.inf if s == "inf" else float(s)
