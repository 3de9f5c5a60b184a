"""
Good-pair bijection - Words with exactly one 123 versus pairs of avoiders.

A word pi1 a pi2 b pi3 c pi4 whose only 123 is abc splits into
sigma1 = a pi3 b pi4 (letters <= b) and sigma2 = pi1 b pi2 c (letters >= b).
Uniqueness forces pi2 and pi3 to be free of b, so the pivot is the
leftmost b of sigma1 and the rightmost b of sigma2.
"""
from __future__ import annotations

from collections.abc import Iterator
from itertools import product

from forge_words.application.combinatorics.patterns import avoids, find_unique_123
from forge_words.application.combinatorics.words import enumerate_words
from forge_words.domain import InvalidGoodPairError
from forge_words.domain.entities import GoodPair, MultiplicityList, Word


def decompose(w: Word) -> GoodPair:
    """
    Split a word with exactly one 123 into its good pair.

    Args:
        w: Word containing the pattern 123 exactly once

    Returns:
        GoodPair with sigma1 over {1..b} and sigma2 over {b..n}, original letter values

    Raises:
        NotExactlyOneError: If w does not contain 123 exactly once
    """
    occurrence = find_unique_123(w)
    i, p, q = (pos - 1 for pos in occurrence.positions)
    a, b, c = occurrence.values
    letters = w.letters

    pi1, pi2, pi3, pi4 = letters[:i], letters[i + 1 : p], letters[p + 1 : q], letters[q + 1 :]
    sigma1 = Word((a, *pi3, b, *pi4), b)
    sigma2 = Word((*pi1, b, *pi2, c), w.alphabet_size)
    return GoodPair(sigma1=sigma1, sigma2=sigma2, b=b, j=sigma1.count(b) - 1)


def good_pair_violations(g: GoodPair) -> list[str]:
    """
    Every good-pair condition g fails, as readable reasons (empty when valid).
    """
    violations: list[str] = []
    b, n = g.b, g.alphabet_size
    s1, s2 = g.sigma1.letters, g.sigma2.letters

    if not 2 <= b <= n - 1:
        violations.append(f"b={b} outside 2..{n - 1}")
    if any(letter > b for letter in s1):
        violations.append("sigma1 has a letter above b")
    if any(letter < b for letter in s2):
        violations.append("sigma2 has a letter below b")
    if not s1:
        violations.append("sigma1 is empty")
    elif s1[0] == b:
        violations.append("sigma1 starts with b")
    if not s2:
        violations.append("sigma2 is empty")
    elif s2[-1] == b:
        violations.append("sigma2 ends with b")
    if g.j < 0 or s1.count(b) != g.j + 1:
        violations.append(f"sigma1 must hold j+1={g.j + 1} copies of b, has {s1.count(b)}")
    if s2.count(b) < 1:
        violations.append("sigma2 holds no copy of b")
    if not avoids(g.sigma1):
        violations.append("sigma1 contains 123")
    if not avoids(g.sigma2):
        violations.append("sigma2 contains 123")
    return violations


def recompose(g: GoodPair) -> Word:
    """
    Rebuild pi1 a pi2 b pi3 c pi4 from a good pair.

    Raises:
        InvalidGoodPairError: If any good-pair condition fails
    """
    violations = good_pair_violations(g)
    if violations:
        raise InvalidGoodPairError("; ".join(violations))

    b = g.b
    s1, s2 = g.sigma1.letters, g.sigma2.letters
    left = s1.index(b)
    right = len(s2) - 1 - s2[::-1].index(b)

    a, pi3, pi4 = s1[0], s1[1:left], s1[left + 1 :]
    pi1, pi2, c = s2[:right], s2[right + 1 : -1], s2[-1]
    return Word((*pi1, a, *pi2, b, *pi3, c, *pi4), g.alphabet_size)


def good_pair_lists(
    lst: MultiplicityList, b: int, j: int
) -> tuple[MultiplicityList, MultiplicityList]:
    """
    Multiplicity lists of sigma1 and sigma2 for fixed (b, j).

    sigma1 takes every letter below b and j+1 copies of b; sigma2 takes
    l_b - j copies of b and every letter above b.
    """
    n = lst.alphabet_size
    if not 2 <= b <= n - 1:
        raise InvalidGoodPairError(f"b={b} outside 2..{n - 1}")
    if not 0 <= j <= lst[b - 1] - 1:
        raise InvalidGoodPairError(f"j={j} outside 0..{lst[b - 1] - 1}")
    left = MultiplicityList((*lst.counts[: b - 1], j + 1))
    right = MultiplicityList((0,) * (b - 1) + (lst[b - 1] - j, *lst.counts[b:]))
    return left, right


def good_sigma1(lst: MultiplicityList, b: int) -> Iterator[Word]:
    """123-avoiders of lst (alphabet 1..b) not starting with b."""
    for w in enumerate_words(lst):
        if w.letters and w[0] != b and avoids(w):
            yield w


def good_sigma2(lst: MultiplicityList, b: int) -> Iterator[Word]:
    """123-avoiders of lst (alphabet 1..n) not ending with b."""
    for w in enumerate_words(lst):
        if w.letters and w[-1] != b and avoids(w):
            yield w


def enumerate_good_pairs(lst: MultiplicityList, b: int, j: int) -> Iterator[GoodPair]:
    """
    All good pairs of lst for fixed pivot letter b and index j.

    Raises:
        InvalidGoodPairError: If b or j lies outside its range
    """
    left, right = good_pair_lists(lst, b, j)
    firsts = list(good_sigma1(left, b))
    seconds = list(good_sigma2(right, b))
    for sigma1, sigma2 in product(firsts, seconds):
        yield GoodPair(sigma1=sigma1, sigma2=sigma2, b=b, j=j)
