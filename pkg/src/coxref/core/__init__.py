"""Combinatorial engine for Coxeter systems."""

from coxref.core.conditionf import Counterexample, FScan, condition_F_scan
from coxref.core.group import (
    IDENTITY,
    CoxeterGroup,
    GroupElement,
    ReflectionElement,
    ball,
    group_for,
    group_order,
    invert,
    left_descents,
    length,
    multiply,
    normal_form,
    reduce,
    reflections_in_ball,
)
from coxref.core.matrix import (
    INF,
    CoxeterMatrix,
    dihedral,
    linear_diagram,
    load_matrix,
    named_matrix,
    parse_matrix_text,
    resolve_matrix,
    triangle,
    validate_matrix,
)
from coxref.core.words import reduce_word, reduced_words, shortlex_key

__all__ = [
    "IDENTITY", "INF", "CoxeterGroup", "CoxeterMatrix", "Counterexample", "FScan",
    "GroupElement", "ReflectionElement", "ball", "condition_F_scan", "dihedral",
    "group_for", "group_order", "invert", "left_descents", "length", "linear_diagram",
    "load_matrix", "multiply", "named_matrix", "normal_form", "parse_matrix_text",
    "reduce", "reduce_word", "reduced_words", "reflections_in_ball", "resolve_matrix",
    "shortlex_key", "triangle", "validate_matrix",
]
