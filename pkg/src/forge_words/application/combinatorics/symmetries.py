"""
Symmetries - Complement and reversal of words.

Complement sends a word of [l_1..l_n] with exactly one 123 to a word
of [l_n..l_1] with exactly one 321 at the same positions.
"""
from __future__ import annotations

from forge_words.domain.entities import MultiplicityList, Word


def complement(w: Word) -> Word:
    """Replace letter i by n + 1 - i; an involution."""
    n = w.alphabet_size
    return Word(tuple(n + 1 - letter for letter in w), n)


def reverse(w: Word) -> Word:
    """Read the word backwards; an involution."""
    return Word(tuple(reversed(w.letters)), w.alphabet_size)


def multiplicity_profile(w: Word) -> MultiplicityList:
    """The list [l_1..l_n] w is associated with."""
    return w.profile()
