"""Minimal generators of Schubert determinantal ideals."""

from .perm import (
    Permutation, PermutationError, parse_permutation, inverse, length, rank,
    contains_pattern, is_vexillary, permutation_matrix, all_permutations,
)
from .diagram import Cell, EssentialCell, rothe_diagram, essential_set, ascii_render
from .generators import Minor, elusive_minors, essential_minors, is_elusive
from .ci import ci_verdict, cross_check
from .report import analyze

__version__ = "0.1.0"

__all__ = [
    "Permutation", "PermutationError", "parse_permutation", "inverse", "length",
    "rank", "contains_pattern", "is_vexillary", "permutation_matrix",
    "all_permutations", "Cell", "EssentialCell", "rothe_diagram", "essential_set",
    "ascii_render", "Minor", "elusive_minors", "essential_minors", "is_elusive",
    "ci_verdict", "cross_check", "analyze",
]
