"""Recognize finite Coxeter systems among permutation groups generated by involutions."""

from coxref.recognizer.perms import format_cycles, load_generators, parse_cycles, parse_generators
from coxref.recognizer.recognize import (
    FiniteActionGroup,
    Verdict,
    certify_coxeter,
    close_group,
    condition_F_decide,
    recover_matrix,
    regular_realization,
)

__all__ = [
    "FiniteActionGroup", "Verdict", "certify_coxeter", "close_group", "condition_F_decide",
    "format_cycles", "load_generators", "parse_cycles", "parse_generators", "recover_matrix",
    "regular_realization",
]
