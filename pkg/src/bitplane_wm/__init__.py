"""Bit-plane image watermarking with attack simulation and plane-combination search."""

from .attacks import ATTACK_ORDER, AttackSpec, apply_attack, default_attacks, identity_attacks
from .bitplane import decompose, embed, embed_plane, extract_plane, pseudorandom_plane, recompose
from .metrics import PRESETS, WeightProfile, crc, mse, psnr, weighted_crc
from .optimizer import (
    EvaluationRecord,
    OptimizationReport,
    PlaneCombination,
    evaluate_combination,
    evaluate_pseudorandom_baseline,
    select_optimal,
    sweep,
)
from .raster import PGMError, load_pgm, read_pgm, save_pgm, write_pgm

__version__ = "0.1.0"
