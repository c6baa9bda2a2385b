"""Exact invariants of finite simple groups and verification of bounds on
minimal permutation degrees, outer automorphism groups and guaranteed
maximal-subgroup indices."""
from .classification import Label, classify, theorem_a_report, v_index
from .groupid import GroupKey, normalize, parse_group, render
from .invariants import invariants, mindeg, order, out_order, witnesses
from .outgroups import out_recipe, theorem_b_check

__all__ = [
    "GroupKey", "Label", "classify", "invariants", "mindeg", "normalize",
    "order", "out_order", "out_recipe", "parse_group", "render",
    "theorem_a_report", "theorem_b_check", "v_index", "witnesses",
]
__version__ = "0.1.0"
