"""
Sequences - Builders for the named integer sequences.
"""
from __future__ import annotations

from math import comb

from forge_words.application.counting import noonan_count
from forge_words.application.series import compute_f
from forge_words.domain.value_objects import IntegerSequence


def catalan_sequence(n_terms: int) -> IntegerSequence:
    """C(2n, n) / (n + 1); control sequence with mu = 4, alpha = -3/2, C = 1/sqrt(pi)."""
    return IntegerSequence.of((comb(2 * n, n) // (n + 1) for n in range(n_terms)), label="catalan")


def noonan_sequence(n_terms: int) -> IntegerSequence:
    """a_1(n) from the closed form, a_1(0) = 0."""
    return IntegerSequence.of(
        (noonan_count(n) if n else 0 for n in range(n_terms)), label="a_1"
    )


def a_r_sequence(r: int, n_terms: int) -> IntegerSequence:
    """a_r(0), ..., a_r(n_terms - 1) from the series f_r."""
    return IntegerSequence.of(compute_f(r, n_terms).integer_coefficients(), label=f"a_{r}")

