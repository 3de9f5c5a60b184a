"""
Counting - Exact avoider counts, exactly-one-123 counts and brute-force oracles.
"""
from forge_words.application.counting.avoiders import (
    AvoiderCountCache,
    count_avoiders,
    default_cache,
)
from forge_words.application.counting.exactly_one import (
    DoubleSumTerm,
    bona_132_count,
    count_exactly_k_bruteforce,
    count_exactly_k_bruteforce_parallel,
    count_exactly_one_123,
    double_sum_terms,
    noonan_count,
)

__all__ = [
    "AvoiderCountCache",
    "count_avoiders",
    "default_cache",
    "DoubleSumTerm",
    "double_sum_terms",
    "count_exactly_one_123",
    "count_exactly_k_bruteforce",
    "count_exactly_k_bruteforce_parallel",
    "noonan_count",
    "bona_132_count",
]
