"""Colored partitions, their q-difference equations, and dilations to
classical partition identities (Siladic, Schur and relatives)."""

from .colored import Color, ColoredInt, ci, is_admissible, min_gap, rank, weights
from .dilation import dilate_partition, verify_classical, verify_dilated_theorem
from .enumerator import enumerate_D, enumerate_dk, enumerate_ek, enumerate_residue_rule
from .qseries import CountTable, DilationSpec, TriSeries, first_difference, schur_product, two_color_product
from .recurrences import GLadder, build_ladder
from .replay import ReplayReport, verify_initials, verify_keyprop, verify_proof_steps, verify_qdiff
from .rules import Part, ResidueRuleSet, load_rules

__version__ = "0.1.0"

__all__ = [
    "Color", "ColoredInt", "ci", "is_admissible", "min_gap", "rank", "weights",
    "dilate_partition", "verify_classical", "verify_dilated_theorem",
    "enumerate_D", "enumerate_dk", "enumerate_ek", "enumerate_residue_rule",
    "CountTable", "DilationSpec", "TriSeries", "first_difference", "schur_product", "two_color_product",
    "GLadder", "build_ladder",
    "ReplayReport", "verify_initials", "verify_keyprop", "verify_proof_steps", "verify_qdiff",
    "Part", "ResidueRuleSet", "load_rules",
]
