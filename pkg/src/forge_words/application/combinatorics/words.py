"""
Word enumeration - Multiset permutations in lexicographic order.

enumerate_words can be restricted to a fixed prefix, so exhaustive
sweeps can be split by first letter and run in parallel; the union of
the partitions is exactly the unpartitioned stream.
"""
from __future__ import annotations

from collections.abc import Iterator, Sequence

from forge_words.domain import InvalidWordError
from forge_words.domain.entities import MultiplicityList, Word


def _next_multiset_permutation(letters: list[int], start: int) -> bool:
    """
    Advance letters[start:] to its next lexicographic arrangement in place.

    Returns False (leaving letters untouched) once the last arrangement is reached.
    """
    j = len(letters) - 2
    while j >= start and letters[j] >= letters[j + 1]:
        j -= 1
    if j < start:
        return False
    k = len(letters) - 1
    while letters[k] <= letters[j]:
        k -= 1
    letters[j], letters[k] = letters[k], letters[j]
    letters[j + 1 :] = reversed(letters[j + 1 :])
    return True


def enumerate_words(
    lst: MultiplicityList, prefix: Sequence[int] = ()
) -> Iterator[Word]:
    """
    Every distinct word associated with lst, exactly once, lexicographically.

    Args:
        lst: Multiplicity list (zero entries allowed)
        prefix: Only words starting with these letters

    Yields:
        Words over {1..len(lst)}; the empty list yields the empty word

    Raises:
        InvalidWordError: If the prefix uses more copies of a letter than lst has
    """
    n = lst.alphabet_size
    remaining = list(lst.counts)
    for letter in prefix:
        if not 1 <= letter <= n or remaining[letter - 1] == 0:
            raise InvalidWordError(f"prefix {tuple(prefix)} does not fit list [{lst}]")
        remaining[letter - 1] -= 1

    letters = list(prefix)
    for index, count in enumerate(remaining):
        letters.extend([index + 1] * count)

    start = len(prefix)
    yield Word(tuple(letters), n)
    while _next_multiset_permutation(letters, start):
        yield Word(tuple(letters), n)


def first_letter_partitions(lst: MultiplicityList) -> list[tuple[int, ...]]:
    """One single-letter prefix per letter that occurs, in order; [()] for empty lists."""
    prefixes = [(index + 1,) for index, count in enumerate(lst.counts) if count > 0]
    return prefixes or [()]


def multiplicity_lists(max_total: int, max_letters: int) -> Iterator[MultiplicityList]:
    """
    Every list of 1..max_letters positive entries with total at most max_total.

    Ordered by number of letters, then lexicographically.
    """

    def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
        if parts == 1:
            yield (total,)
            return
        for first in range(1, total - parts + 2):
            for rest in compositions(total - first, parts - 1):
                yield (first, *rest)

    for letters in range(1, max_letters + 1):
        found: list[tuple[int, ...]] = []
        for total in range(letters, max_total + 1):
            found.extend(compositions(total, letters))
        for counts in sorted(found):
            yield MultiplicityList(counts)
