"""Exact split-quaternion algebra, equation solvers, and 2x2 left spectra."""

from .algebra import (
    I,
    J,
    K,
    ONE,
    ZERO,
    AlgebraClass,
    NotInvertibleError,
    QuadExt,
    Rat,
    SplitQuaternion,
    inner,
    sq,
)

__all__ = [
    "AlgebraClass",
    "NotInvertibleError",
    "QuadExt",
    "Rat",
    "SplitQuaternion",
    "inner",
    "sq",
    "ZERO",
    "ONE",
    "I",
    "J",
    "K",
]

__version__ = "0.1.0"
