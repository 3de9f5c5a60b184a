"""
Exactly-one counts - The double-sum formula, brute-force oracles and closed forms.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb

from forge_words.application.combinatorics import (
    count_pattern_occurrences,
    enumerate_words,
    first_letter_partitions,
)
from forge_words.application.counting.avoiders import AvoiderCountCache, count_avoiders
from forge_words.domain.entities import PATTERN_123, MultiplicityList, Pattern
from forge_words.infrastructure.logging import LogService

_logger = LogService(__name__)


@dataclass(frozen=True)
class DoubleSumTerm:
    """
    One (b, j) summand of the exactly-one-123 formula.

    Attributes:
        b: Pivot letter
        j: Copies of b after the pattern's c (0 <= j <= l_b - 1)
        first_factor: Good sigma1 count, A(l_1..l_{b-1}, j+1) - A(l_1..l_{b-1}, j)
        second_factor: Good sigma2 count, A(l_b-j, l_{b+1}..) - A(l_b-j-1, l_{b+1}..)
    """

    b: int
    j: int
    first_factor: int
    second_factor: int

    @property
    def value(self) -> int:
        return self.first_factor * self.second_factor

    def to_dict(self) -> dict[str, int]:
        return {
            "b": self.b,
            "j": self.j,
            "first_factor": self.first_factor,
            "second_factor": self.second_factor,
            "value": self.value,
        }


def double_sum_terms(
    lst: MultiplicityList, cache: AvoiderCountCache | None = None
) -> list[DoubleSumTerm]:
    """
    Every summand of the double sum, after zero entries are stripped.

    Indices b refer to the stripped list. Lists with fewer than three
    positive entries have no summands.
    """
    counts = lst.stripped().counts
    n = len(counts)

    def a(*parts: tuple[int, ...]) -> int:
        return count_avoiders(MultiplicityList(sum(parts, ())), cache)

    terms: list[DoubleSumTerm] = []
    for b in range(2, n):
        head, l_b, tail = counts[: b - 1], counts[b - 1], counts[b:]
        for j in range(l_b):
            first = a(head, (j + 1,)) - a(head, (j,))
            second = a((l_b - j,), tail) - a((l_b - j - 1,), tail)
            terms.append(DoubleSumTerm(b=b, j=j, first_factor=first, second_factor=second))
    return terms


def count_exactly_one_123(
    lst: MultiplicityList, cache: AvoiderCountCache | None = None
) -> int:
    """
    Number of words of lst containing 123 exactly once, by the double-sum formula.

    Args:
        lst: Multiplicity list; zero entries are stripped first
        cache: Avoider-count cache (process default if None)

    Returns:
        The exact count; 0 when fewer than three letters occur
    """
    total = sum(term.value for term in double_sum_terms(lst, cache))
    _logger.debug("Exactly-one count evaluated", list=list(lst.counts), count=total)
    return total


def _count_in_partition(
    lst: MultiplicityList, p: Pattern, k: int, prefix: tuple[int, ...]
) -> int:
    return sum(
        1 for w in enumerate_words(lst, prefix) if count_pattern_occurrences(w, p) == k
    )


def count_exactly_k_bruteforce(
    lst: MultiplicityList, p: Pattern = PATTERN_123, k: int = 1
) -> int:
    """
    Words of lst with exactly k occurrences of p, by full enumeration.

    Exhaustive; keep lst.total at most around 12.
    """
    with LogService.timed("count_exactly_k_bruteforce", logger=_logger, list=str(lst), k=k):
        return _count_in_partition(lst, p, k, ())


def count_exactly_k_bruteforce_parallel(
    lst: MultiplicityList,
    p: Pattern = PATTERN_123,
    k: int = 1,
    workers: int = 4,
) -> int:
    """
    Same count as count_exactly_k_bruteforce, swept by first letter on a process pool.

    The per-partition counts are summed in partition order, so the
    result does not depend on scheduling.
    """
    prefixes = first_letter_partitions(lst)
    with ProcessPoolExecutor(max_workers=max(1, workers)) as pool:
        futures = [pool.submit(_count_in_partition, lst, p, k, prefix) for prefix in prefixes]
        return sum(future.result() for future in futures)


def noonan_count(n: int) -> int:
    """
    Permutations of length n with exactly one 123: (3/n) * C(2n, n+3).

    Zero for n < 3.
    """
    if n < 1:
        raise ValueError("n must be positive")
    return 3 * comb(2 * n, n + 3) // n


def bona_132_count(n: int) -> int:
    """Permutations of length n with exactly one 132: C(2n-3, n-3), zero for n < 3."""
    if n < 1:
        raise ValueError("n must be positive")
    if n < 3:
        return 0
    return comb(2 * n - 3, n - 3)
