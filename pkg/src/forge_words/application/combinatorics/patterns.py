"""
Pattern occurrences - Counting and locating length-3 patterns in words.

The triple scan is the reference implementation. Monotone patterns
(123, 321) are counted by a prefix-count pass that must agree with it.
"""
from __future__ import annotations

from collections.abc import Iterator
from itertools import combinations

from forge_words.domain import NotExactlyOneError
from forge_words.domain.entities import PATTERN_123, PATTERN_321, OccurrenceTriple, Pattern, Word


def _order_isomorphic(values: tuple[int, int, int], pattern: Pattern) -> bool:
    """Strict order isomorphism; equal letters never match a permutation pattern."""
    for s, t in ((0, 1), (0, 2), (1, 2)):
        if values[s] == values[t]:
            return False
        if (values[s] < values[t]) != (pattern[s] < pattern[t]):
            return False
    return True


def pattern_occurrences(w: Word, p: Pattern = PATTERN_123) -> Iterator[OccurrenceTriple]:
    """
    Yield every occurrence of p in w, positions 1-based, in lexicographic position order.
    """
    for i, j, k in combinations(range(len(w)), 3):
        values = (w[i], w[j], w[k])
        if _order_isomorphic(values, p):
            yield OccurrenceTriple(positions=(i + 1, j + 1, k + 1), values=values)


def count_occurrences_by_triple_scan(w: Word, p: Pattern = PATTERN_123) -> int:
    """Reference O(length^3) occurrence count."""
    return sum(1 for _ in pattern_occurrences(w, p))


def _count_monotone(w: Word, increasing: bool) -> int:
    """
    Sum over middle positions of (#smaller before) * (#greater after) for 123,
    mirrored for 321. O(length * alphabet).
    """
    n = w.alphabet_size
    before = [0] * (n + 2)
    after = [0] * (n + 2)
    for letter in w:
        after[letter] += 1

    total = 0
    for letter in w:
        after[letter] -= 1
        if increasing:
            left = sum(before[1:letter])
            right = sum(after[letter + 1 : n + 1])
        else:
            left = sum(before[letter + 1 : n + 1])
            right = sum(after[1:letter])
        total += left * right
        before[letter] += 1
    return total


def count_pattern_occurrences(w: Word, p: Pattern = PATTERN_123) -> int:
    """
    Number of index triples i < j < k with (w_i, w_j, w_k) order-isomorphic to p.

    Words shorter than 3 letters have no occurrences.
    """
    if len(w) < 3:
        return 0
    if p == PATTERN_123:
        return _count_monotone(w, increasing=True)
    if p == PATTERN_321:
        return _count_monotone(w, increasing=False)
    return count_occurrences_by_triple_scan(w, p)


def avoids(w: Word, p: Pattern = PATTERN_123) -> bool:
    """True when w has no occurrence of p."""
    return next(pattern_occurrences(w, p), None) is None


def find_unique_123(w: Word) -> OccurrenceTriple:
    """
    The single 123 occurrence of w.

    Raises:
        NotExactlyOneError: If w has zero or at least two occurrences
    """
    found = list(pattern_occurrences(w, PATTERN_123))
    if len(found) != 1:
        raise NotExactlyOneError(str(w), len(found))
    return found[0]
