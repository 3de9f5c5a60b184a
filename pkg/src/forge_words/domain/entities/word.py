"""
Word Entities - Words, multiplicity lists, occurrences and good pairs.

Letters are 1-based consecutive integers. Words are value sequences:
two words are equal when their letter tuples and alphabets are equal.
"""
from __future__ import annotations

import math
from collections.abc import Iterator
from dataclasses import dataclass

from forge_words.domain.exceptions import InvalidMultiplicityListError, InvalidWordError

Pattern = tuple[int, int, int]

PATTERN_123: Pattern = (1, 2, 3)
PATTERN_132: Pattern = (1, 3, 2)
PATTERN_321: Pattern = (3, 2, 1)


def parse_pattern(text: str) -> Pattern:
    """
    Parse a length-3 permutation pattern such as "123" or "132".

    Raises:
        InvalidWordError: If text is not a permutation of 1, 2, 3
    """
    digits = tuple(int(ch) for ch in text if ch.isdigit())
    if len(digits) != 3 or sorted(digits) != [1, 2, 3] or len(text.strip()) != 3:
        raise InvalidWordError(f"'{text}' is not a permutation pattern of 1,2,3")
    return (digits[0], digits[1], digits[2])


@dataclass(frozen=True)
class MultiplicityList:
    """
    The list [l_1, ..., l_n] of letter multiplicities defining a word class.

    Zero entries are allowed: they contribute no letters but keep the
    alphabet positions aligned.

    Usage:
        lst = MultiplicityList.parse("2,2,1")
        lst.total            # 5
        lst.canonical_key()  # (1, 2, 2)
    """

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        for value in self.counts:
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise InvalidMultiplicityListError(
                    ",".join(str(c) for c in self.counts),
                    "entries must be nonnegative integers",
                )

    @classmethod
    def of(cls, *counts: int) -> MultiplicityList:
        """Create from positional counts."""
        return cls(tuple(counts))

    @classmethod
    def uniform(cls, r: int, n: int) -> MultiplicityList:
        """n letters, each occurring r times."""
        return cls((r,) * n)

    @classmethod
    def parse(cls, raw: str) -> MultiplicityList:
        """
        Parse a comma-separated list without spaces, e.g. "2,2,2".

        Raises:
            InvalidMultiplicityListError: On malformed input
        """
        if raw == "":
            return cls(())
        if any(ch.isspace() for ch in raw):
            raise InvalidMultiplicityListError(raw, "spaces are not allowed")
        parts = raw.split(",")
        if not all(part.isdigit() for part in parts):
            raise InvalidMultiplicityListError(raw, "entries must be nonnegative integers")
        return cls(tuple(int(part) for part in parts))

    @property
    def total(self) -> int:
        """Length of any associated word."""
        return sum(self.counts)

    @property
    def alphabet_size(self) -> int:
        return len(self.counts)

    def stripped(self) -> MultiplicityList:
        """Copy with zero entries removed."""
        return MultiplicityList(tuple(c for c in self.counts if c > 0))

    def canonical_key(self) -> tuple[int, ...]:
        """Sorted ascending with zeros removed (A is symmetric in its arguments)."""
        return tuple(sorted(c for c in self.counts if c > 0))

    def reversed(self) -> MultiplicityList:
        """The list [l_n, ..., l_1]."""
        return MultiplicityList(tuple(reversed(self.counts)))

    def multinomial(self) -> int:
        """Number of associated words: total! / prod(l_i!)."""
        result = math.factorial(self.total)
        for c in self.counts:
            result //= math.factorial(c)
        return result

    def __len__(self) -> int:
        return len(self.counts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.counts)

    def __getitem__(self, index: int) -> int:
        return self.counts[index]

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.counts)


@dataclass(frozen=True)
class Word:
    """
    Finite sequence of letters from {1, ..., alphabet_size}.

    Usage:
        w = Word.parse("121322", alphabet_size=3)
        w.profile()   # MultiplicityList((2, 3, 1))
        str(w)        # "121322"
    """

    letters: tuple[int, ...]
    alphabet_size: int

    def __post_init__(self) -> None:
        if self.alphabet_size < 0:
            raise InvalidWordError("alphabet size must be nonnegative")
        for letter in self.letters:
            if not 1 <= letter <= self.alphabet_size:
                raise InvalidWordError(
                    f"letter {letter} outside alphabet 1..{self.alphabet_size}"
                )

    @classmethod
    def parse(cls, text: str, alphabet_size: int | None = None) -> Word:
        """
        Parse "121322" (one digit per letter) or "1,12,3" (comma-separated).

        The alphabet defaults to the largest letter present.
        """
        if text == "":
            letters: tuple[int, ...] = ()
        elif "," in text:
            letters = tuple(int(part) for part in text.split(","))
        else:
            letters = tuple(int(ch) for ch in text)
        size = alphabet_size if alphabet_size is not None else max(letters, default=0)
        return cls(letters, size)

    @classmethod
    def empty(cls, alphabet_size: int = 0) -> Word:
        return cls((), alphabet_size)

    def profile(self) -> MultiplicityList:
        """The multiplicity list this word is associated with."""
        counts = [0] * self.alphabet_size
        for letter in self.letters:
            counts[letter - 1] += 1
        return MultiplicityList(tuple(counts))

    def count(self, letter: int) -> int:
        return self.letters.count(letter)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, index: int) -> int:
        return self.letters[index]

    def __str__(self) -> str:
        if self.alphabet_size <= 9:
            return "".join(str(letter) for letter in self.letters)
        return ",".join(str(letter) for letter in self.letters)


@dataclass(frozen=True)
class OccurrenceTriple:
    """
    One occurrence of a length-3 pattern.

    Attributes:
        positions: 1-based positions (i_1, i_2, i_3), strictly increasing
        values: The letters at those positions
    """

    positions: tuple[int, int, int]
    values: tuple[int, int, int]

    def __post_init__(self) -> None:
        i1, i2, i3 = self.positions
        if not 1 <= i1 < i2 < i3:
            raise InvalidWordError(f"positions {self.positions} are not increasing")


@dataclass(frozen=True)
class GoodPair:
    """
    A pair (sigma1, sigma2) from the bijection behind the exactly-one-123 formula.

    sigma1 is a word over {1..b} holding j+1 copies of b; sigma2 is a word
    over {b..n} holding l_b - j copies of b. Letters keep their original
    values. The good-pair conditions are checked by
    forge_words.application.combinatorics.bijection.good_pair_violations.
    """

    sigma1: Word
    sigma2: Word
    b: int
    j: int

    @property
    def alphabet_size(self) -> int:
        return self.sigma2.alphabet_size

    @property
    def copies_of_b(self) -> int:
        """l_b implied by the pair: (j + 1) + (l_b - j) - 1 shared pivot."""
        return self.sigma1.count(self.b) + self.sigma2.count(self.b) - 1
