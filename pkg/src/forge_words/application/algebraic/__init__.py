"""
Algebraic - Bivariate polynomial equations for series: evaluation and guessing.
"""
from forge_words.application.algebraic.guesser import (
    DEFAULT_GUARD,
    degree_profile,
    eval_at_series,
    guess_algebraic,
    normalize_polynomial,
)

__all__ = [
    "DEFAULT_GUARD",
    "eval_at_series",
    "guess_algebraic",
    "degree_profile",
    "normalize_polynomial",
]
