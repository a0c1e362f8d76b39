"""Exact verification of fine gradings of sl(4,C), sp(4,C), o(4,C) and their real forms."""
from .abelian import AbelianGroup, smith_normal_form
from .catalog import load_catalog
from .exact import GQ, GaussianRational
from .gradings import Grading, product_table, universal_group_of
from .maps import Antiautomorphism, Automorphism
from .mat import Mat2, Mat4, signature
from .realforms import count_real_gradings, determine_real_grading, gamma2_obstruction
from .subspace import Subspace

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "Antiautomorphism",
    "Automorphism",
    "GQ",
    "GaussianRational",
    "Grading",
    "Mat2",
    "Mat4",
    "Subspace",
    "count_real_gradings",
    "determine_real_grading",
    "gamma2_obstruction",
    "load_catalog",
    "product_table",
    "signature",
    "smith_normal_form",
    "universal_group_of",
]
