"""Command-line front end.

Subcommands: ``embed``, ``extract``, ``attack``, ``evaluate`` and ``optimize``.
``evaluate`` and ``optimize`` also read a JSON config (``--config``); command
line flags override values from the file.

Exit statuses: 0 success, 2 usage error, 3 I/O error, 4 validation error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import corpus
from .attacks import ATTACK_ORDER, DEFAULT_PARAMS, DEFAULT_SEED, AttackSpec, apply_attack
from .bitplane import check_plane_index, embed, extract_plane
from .metrics import PRESETS, get_profile, psnr
from .optimizer import (DEFAULT_IMAGE_PLANES, DEFAULT_WATERMARK_PLANES, PlaneCombination,
                        evaluate_combination, sweep)
from .raster import read_pgm, write_pgm
from .report import dumps, fmt_real, report_to_csv, report_to_dict

log = logging.getLogger("bitplane_wm")

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_INVALID = 4


class UsageError(Exception):
    pass


def _plane_list(text: str) -> list[int]:
    """Parse ``"7,8"`` or ``"1-8"`` (or a mix) into plane indices."""
    out = []
    for part in str(text).split(","):
        part = part.strip()
        if not part:
            continue
        if "-" in part:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return [check_plane_index(p) for p in out]


def _attack_params_from_args(kind, args) -> dict:
    params = {}
    for name in DEFAULT_PARAMS[kind]:
        value = getattr(args, name, None)
        if value is not None:
            params[name] = value
    return params


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bitplane-wm", description="Bit-plane watermarking toolkit")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("embed", help="embed one watermark plane into one cover plane")
    p.add_argument("--cover", required=True)
    p.add_argument("--watermark", required=True)
    p.add_argument("--image-plane", type=int, required=True)
    p.add_argument("--wm-plane", type=int, required=True)
    p.add_argument("--out", required=True)

    p = sub.add_parser("extract", help="write one bit plane as a 0/255 PGM")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--plane", type=int, required=True)
    p.add_argument("--out", help="defaults to <input>.plane<N>.pgm")

    p = sub.add_parser("attack", help="apply one attack to an image")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--kind", required=True, choices=ATTACK_ORDER)
    p.add_argument("--out", required=True)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--angle", type=float)
    p.add_argument("--fraction", type=float)
    p.add_argument("--size", type=int)
    p.add_argument("--step", type=int)
    p.add_argument("--dx", type=int)
    p.add_argument("--dy", type=int)
    p.add_argument("--density", type=float)
    p.add_argument("--quality", type=int)
    p.add_argument("--factor", type=int)

    for name in ("evaluate", "optimize"):
        p = sub.add_parser(name)
        p.add_argument("--config", help="JSON config file")
        p.add_argument("--cover", help="cover PGM (default: bundled cameraman)")
        p.add_argument("--watermark", help="watermark PGM (default: bundled signature)")
        p.add_argument("--profiles",
                       help="comma-separated preset names (default: all four table1 presets)")
        p.add_argument("--seed", type=int, help=f"salt-and-pepper seed (default {DEFAULT_SEED})")
        p.add_argument("--json", dest="json_out", help="write the JSON report here (default stdout)")
        if name == "evaluate":
            p.add_argument("--image-plane", type=int)
            p.add_argument("--wm-plane", type=int)
        else:
            p.add_argument("--image-planes", help="e.g. 7,8 (default)")
            p.add_argument("--wm-planes", help="e.g. 1-8 (default)")
            p.add_argument("--all-planes", action="store_true",
                           help="sweep all 64 combinations")
            p.add_argument("--csv", dest="csv_out", help="write the CSV matrix here")
            p.add_argument("--workers", type=int)
            p.add_argument("--no-baseline", action="store_true",
                           help="skip the pseudorandom LSB baseline")
    return parser


def _load_config(path):
    if path is None:
        return {}
    with open(path, encoding="utf-8") as fh:
        cfg = json.load(fh)
    if not isinstance(cfg, dict):
        raise ValueError("config file must hold a JSON object")
    return cfg


def _pick(flag, cfg, key, default=None):
    return flag if flag is not None else cfg.get(key, default)


def _inputs(args, cfg):
    cover_path = _pick(args.cover, cfg, "cover")
    wm_path = _pick(args.watermark, cfg, "watermark")
    cover = read_pgm(cover_path) if cover_path else corpus.load_cover()
    watermark = read_pgm(wm_path) if wm_path else corpus.load_signature()
    return cover, watermark, {"cover": cover_path or "bundled:cover.pgm",
                              "watermark": wm_path or "bundled:signature.pgm"}


def _attacks(cfg, seed):
    entries = cfg.get("attacks")
    if entries is None:
        return [AttackSpec(kind, seed=seed) for kind in ATTACK_ORDER]
    if len(entries) != len(ATTACK_ORDER):
        raise ValueError(f"config must list {len(ATTACK_ORDER)} attacks, got {len(entries)}")
    specs = []
    for entry in entries:
        if isinstance(entry, str):
            entry = {"kind": entry}
        entry = dict(entry)
        entry.setdefault("seed", seed)
        specs.append(AttackSpec.from_dict(entry))
    return specs


def _profiles(args, cfg):
    if args.profiles is not None:
        return [get_profile(name.strip()) for name in args.profiles.split(",") if name.strip()]
    return [get_profile(p) for p in cfg.get("profiles", list(PRESETS))]


def _write_text(path, text):
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def cmd_embed(args):
    cover = read_pgm(args.cover)
    watermark = read_pgm(args.watermark)
    out = embed(cover, watermark, args.image_plane, args.wm_plane)
    write_pgm(args.out, out)
    print(f"fidelity PSNR: {fmt_real(psnr(cover, out))} dB")


def cmd_extract(args):
    plane = extract_plane(read_pgm(args.input), args.plane)
    out = args.out or f"{args.input}.plane{args.plane}.pgm"
    write_pgm(out, plane * 255)
    print(out)


def cmd_attack(args):
    spec = AttackSpec(args.kind, _attack_params_from_args(args.kind, args), args.seed)
    write_pgm(args.out, apply_attack(read_pgm(args.input), spec))


def cmd_evaluate(args):
    cfg = _load_config(args.config)
    seed = _pick(args.seed, cfg, "seed", DEFAULT_SEED)
    l = _pick(args.image_plane, cfg, "image_plane")
    k = _pick(args.wm_plane, cfg, "watermark_plane")
    if l is None or k is None:
        raise UsageError("evaluate needs --image-plane and --wm-plane (or config keys)")
    cover, watermark, sources = _inputs(args, cfg)
    attacks = _attacks(cfg, seed)
    profiles = _profiles(args, cfg)
    record = evaluate_combination(cover, watermark, PlaneCombination(l, k), attacks, profiles)
    doc = record.to_dict()
    doc["attacks"] = [a.to_dict() for a in attacks]
    doc["profiles"] = [p.to_dict() for p in profiles]
    doc["provenance"] = {**sources, "seed": seed}
    _write_text(_pick(args.json_out, cfg, "json"), dumps(doc))


def cmd_optimize(args):
    cfg = _load_config(args.config)
    seed = _pick(args.seed, cfg, "seed", DEFAULT_SEED)
    if args.all_planes:
        image_planes = watermark_planes = list(range(1, 9))
    else:
        image_planes = (_plane_list(args.image_planes) if args.image_planes
                        else cfg.get("image_planes", list(DEFAULT_IMAGE_PLANES)))
        watermark_planes = (_plane_list(args.wm_planes) if args.wm_planes
                            else cfg.get("watermark_planes", list(DEFAULT_WATERMARK_PLANES)))
    cover, watermark, sources = _inputs(args, cfg)
    attacks = _attacks(cfg, seed)
    profiles = _profiles(args, cfg)
    baseline = cfg.get("baseline", True) and not args.no_baseline
    report = sweep(cover, watermark, image_planes, watermark_planes, attacks, profiles,
                   baseline_seed=seed if baseline else None,
                   workers=_pick(args.workers, cfg, "workers", 1))
    json_out = _pick(args.json_out, cfg, "json")
    csv_out = _pick(args.csv_out, cfg, "csv")
    _write_text(json_out, dumps(report_to_dict(report, {**sources, "seed": seed})))
    if csv_out:
        Path(csv_out).write_text(report_to_csv(report), encoding="utf-8")
    # keep stdout clean for the JSON when it goes there
    stream = sys.stderr if json_out is None else sys.stdout
    for p in profiles:
        combo = report.selections[p.name]
        value = report.record(combo.image_plane, combo.watermark_plane).weighted[p.name]
        print(f"{p.name}: {combo.label} weighted CRC {fmt_real(value)}", file=stream)


COMMANDS = {
    "embed": cmd_embed,
    "extract": cmd_extract,
    "attack": cmd_attack,
    "evaluate": cmd_evaluate,
    "optimize": cmd_optimize,
}


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ValueError, TypeError, KeyError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


def main():
    sys.exit(run())
