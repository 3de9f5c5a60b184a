"""
Recurrence - P-recursive operators, recurrence guessing and asymptotic estimates.
"""
from forge_words.application.recurrence.asymptotics import (
    conjecture_check,
    estimate_asymptotics,
    growth_target,
    known_constant,
    richardson,
)
from forge_words.application.recurrence.guesser import DEFAULT_GUARD, guess_recurrence
from forge_words.application.recurrence.operators import (
    annihilates,
    apply_operator,
    extend_sequence,
    operators_equivalent,
)

__all__ = [
    "apply_operator",
    "annihilates",
    "extend_sequence",
    "operators_equivalent",
    "DEFAULT_GUARD",
    "guess_recurrence",
    "richardson",
    "estimate_asymptotics",
    "conjecture_check",
    "growth_target",
    "known_constant",
]
