"""Partially symmetric Macdonald polynomials, their modified forms, and the matching fixed-point calculus."""

from .qt import QT
from .shapes import FixedPointLabel, SplitIndex, phi, phi_inverse
from .nonsym import compute_E
from .partial import build_J, build_P
from .polyrep import build_Htilde
from .fixedpoints import FixedPointVector, apply_word
from .pieri import brute_force_expand, coefficient_A, enumerate_support, match_check

__version__ = "0.1.0"

__all__ = [
    "QT", "SplitIndex", "FixedPointLabel", "phi", "phi_inverse", "compute_E", "build_P", "build_J",
    "build_Htilde", "FixedPointVector", "apply_word", "enumerate_support", "coefficient_A",
    "brute_force_expand", "match_check",
]
