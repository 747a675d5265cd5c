"""Roots of polynomial congruences and ideals of monogenic orders Z[alpha]."""
from .composition import compose_pairs, compose_roots, lift_filter
from .correspondence import (
    RootPair,
    ideal_to_pair,
    ideal_to_root,
    make_pair,
    pair_to_ideal,
    root_to_ideal,
    solve_lambda,
)
from .exact_linalg import gcd_completion, hnf_upper, minor_det, snf_diagonal
from .ideals import IdealHNF, contains, integer_content, invariant_factors, is_ideal, multiply, norm
from .order_core import MonicPoly, RootClass, companion_matrix, discriminant, hensel_lift, mul_elements, roots_mod

__version__ = "0.1.0"

__all__ = [
    "IdealHNF",
    "MonicPoly",
    "RootClass",
    "RootPair",
    "companion_matrix",
    "compose_pairs",
    "compose_roots",
    "contains",
    "discriminant",
    "gcd_completion",
    "hensel_lift",
    "hnf_upper",
    "ideal_to_pair",
    "ideal_to_root",
    "integer_content",
    "invariant_factors",
    "is_ideal",
    "lift_filter",
    "make_pair",
    "minor_det",
    "mul_elements",
    "multiply",
    "norm",
    "pair_to_ideal",
    "root_to_ideal",
    "roots_mod",
    "snf_diagonal",
    "solve_lambda",
]
