"""
Combinatorics - Pattern occurrences, word enumeration, symmetries and the good-pair bijection.
"""
from forge_words.application.combinatorics.bijection import (
    decompose,
    enumerate_good_pairs,
    good_pair_lists,
    good_pair_violations,
    recompose,
)
from forge_words.application.combinatorics.patterns import (
    avoids,
    count_occurrences_by_triple_scan,
    count_pattern_occurrences,
    find_unique_123,
    pattern_occurrences,
)
from forge_words.application.combinatorics.symmetries import (
    complement,
    multiplicity_profile,
    reverse,
)
from forge_words.application.combinatorics.words import (
    enumerate_words,
    first_letter_partitions,
    multiplicity_lists,
)

__all__ = [
    "count_pattern_occurrences",
    "count_occurrences_by_triple_scan",
    "pattern_occurrences",
    "avoids",
    "find_unique_123",
    "enumerate_words",
    "first_letter_partitions",
    "multiplicity_lists",
    "complement",
    "reverse",
    "multiplicity_profile",
    "decompose",
    "recompose",
    "good_pair_violations",
    "good_pair_lists",
    "enumerate_good_pairs",
]
