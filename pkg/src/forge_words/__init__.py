"""
ForgeWords - Exact enumeration of words containing the pattern 123 exactly once.

Main exports:
    - Word, MultiplicityList: Words and the letter multiplicities that define them
    - count_exactly_one_123: Double-sum formula over avoider counts
    - count_avoiders: Memoized number of 123-avoiding words of a list
    - solve_g_system, compute_h, compute_f: Weight enumerators and the OGF f_r
    - guess_algebraic, eval_at_series: Algebraic equations of series
    - guess_recurrence, extend_sequence, estimate_asymptotics: P-recursive sequences
"""
__version__ = "0.1.0"

from forge_words.application.algebraic import eval_at_series, guess_algebraic
from forge_words.application.combinatorics import (
    complement,
    count_pattern_occurrences,
    decompose,
    enumerate_words,
    find_unique_123,
    recompose,
)
from forge_words.application.counting import (
    AvoiderCountCache,
    count_avoiders,
    count_exactly_k_bruteforce,
    count_exactly_one_123,
)
from forge_words.application.recurrence import (
    apply_operator,
    conjecture_check,
    estimate_asymptotics,
    extend_sequence,
    guess_recurrence,
)
from forge_words.application.series import compute_f, compute_h, solve_g_system
from forge_words.domain.entities import GoodPair, MultiplicityList, OccurrenceTriple, Word
from forge_words.domain.value_objects import (
    BivariatePolynomial,
    IntegerSequence,
    RecurrenceOperator,
    TruncatedSeries,
)

__all__ = [
    "__version__",
    # Domain
    "Word",
    "MultiplicityList",
    "OccurrenceTriple",
    "GoodPair",
    # Value Objects
    "TruncatedSeries",
    "BivariatePolynomial",
    "RecurrenceOperator",
    "IntegerSequence",
    # Combinatorics
    "count_pattern_occurrences",
    "enumerate_words",
    "complement",
    "find_unique_123",
    "decompose",
    "recompose",
    # Counting
    "AvoiderCountCache",
    "count_avoiders",
    "count_exactly_one_123",
    "count_exactly_k_bruteforce",
    # Series
    "solve_g_system",
    "compute_h",
    "compute_f",
    # Algebraic
    "eval_at_series",
    "guess_algebraic",
    # Recurrence
    "apply_operator",
    "guess_recurrence",
    "extend_sequence",
    "estimate_asymptotics",
    "conjecture_check",
]
