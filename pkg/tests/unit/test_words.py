"""Tests for words, multiplicity lists and multiset enumeration."""
import pytest

from forge_words.application.combinatorics import (
    enumerate_words,
    first_letter_partitions,
    multiplicity_lists,
)
from forge_words.domain import InvalidMultiplicityListError, InvalidWordError
from forge_words.domain.entities import (
    PATTERN_132,
    MultiplicityList,
    OccurrenceTriple,
    Word,
    parse_pattern,
)


class TestMultiplicityList:
    """Tests for MultiplicityList."""

    def test_parse_comma_separated(self):
        """parse reads a comma-separated list."""
        lst = MultiplicityList.parse("2,2,1")
        assert lst.counts == (2, 2, 1)
        assert lst.total == 5
        assert lst.alphabet_size == 3

    def test_parse_empty_string_is_empty_list(self):
        assert MultiplicityList.parse("").counts == ()

    @pytest.mark.parametrize("raw", ["2, 2", "2,,2", "a,1", "-1,2", "2,2 "])
    def test_parse_rejects_malformed(self, raw):
        """parse raises InvalidMultiplicityListError on malformed input."""
        with pytest.raises(InvalidMultiplicityListError) as exc_info:
            MultiplicityList.parse(raw)
        assert exc_info.value.code == "INVALID_MULTIPLICITY_LIST"

    def test_negative_entry_rejected(self):
        with pytest.raises(InvalidMultiplicityListError):
            MultiplicityList((1, -1))

    def test_canonical_key_sorts_and_strips_zeros(self):
        assert MultiplicityList.of(2, 0, 1, 2).canonical_key() == (1, 2, 2)

    def test_stripped_keeps_order(self):
        assert MultiplicityList.of(2, 0, 1).stripped().counts == (2, 1)

    def test_reversed(self):
        assert MultiplicityList.of(1, 2, 3).reversed().counts == (3, 2, 1)

    def test_uniform(self):
        assert MultiplicityList.uniform(2, 3).counts == (2, 2, 2)

    def test_multinomial(self):
        assert MultiplicityList.of(2, 2, 2).multinomial() == 90

    def test_str_round_trips_through_parse(self):
        lst = MultiplicityList.of(3, 0, 1)
        assert MultiplicityList.parse(str(lst)) == lst


class TestWord:
    """Tests for Word."""

    def test_parse_digits(self):
        w = Word.parse("121322")
        assert w.letters == (1, 2, 1, 3, 2, 2)
        assert w.alphabet_size == 3

    def test_parse_comma_separated_for_large_alphabets(self):
        w = Word.parse("1,12,3")
        assert w.letters == (1, 12, 3)
        assert str(w) == "1,12,3"

    def test_parse_with_explicit_alphabet(self):
        assert Word.parse("11", alphabet_size=3).profile().counts == (2, 0, 0)

    def test_letter_outside_alphabet_rejected(self):
        with pytest.raises(InvalidWordError):
            Word((1, 4), 3)

    def test_profile(self):
        assert Word.parse("121322").profile().counts == (2, 3, 1)

    def test_str_single_digits(self):
        assert str(Word.parse("121322")) == "121322"

    def test_empty_word(self):
        w = Word.empty(2)
        assert len(w) == 0
        assert w.profile().counts == (0, 0)


class TestPatternParsing:
    """Tests for parse_pattern and OccurrenceTriple."""

    def test_parse_pattern(self):
        assert parse_pattern("132") == PATTERN_132

    @pytest.mark.parametrize("text", ["12", "1234", "113", "124"])
    def test_parse_pattern_rejects_non_permutations(self, text):
        with pytest.raises(InvalidWordError):
            parse_pattern(text)

    def test_occurrence_positions_must_increase(self):
        with pytest.raises(InvalidWordError):
            OccurrenceTriple(positions=(2, 1, 3), values=(1, 2, 3))


class TestEnumerateWords:
    """Tests for multiset permutation enumeration."""

    def test_count_matches_multinomial(self):
        lst = MultiplicityList.of(2, 1, 2)
        words = list(enumerate_words(lst))
        assert len(words) == lst.multinomial() == 30
        assert len(set(words)) == 30

    def test_lexicographic_order(self):
        words = [str(w) for w in enumerate_words(MultiplicityList.of(1, 2))]
        assert words == ["122", "212", "221"]

    def test_every_word_has_the_list_as_profile(self):
        lst = MultiplicityList.of(1, 0, 2)
        assert all(w.profile() == lst for w in enumerate_words(lst))

    def test_empty_list_yields_empty_word(self):
        assert list(enumerate_words(MultiplicityList(()))) == [Word.empty()]

    def test_prefix_restricts_words(self):
        words = list(enumerate_words(MultiplicityList.of(2, 1), prefix=(2,)))
        assert [str(w) for w in words] == ["211"]

    def test_prefix_exceeding_list_rejected(self):
        with pytest.raises(InvalidWordError):
            list(enumerate_words(MultiplicityList.of(1, 1), prefix=(1, 1)))

    def test_first_letter_partitions_cover_all_words(self):
        lst = MultiplicityList.of(2, 0, 1, 1)
        prefixes = first_letter_partitions(lst)
        assert prefixes == [(1,), (3,), (4,)]
        total = sum(len(list(enumerate_words(lst, p))) for p in prefixes)
        assert total == lst.multinomial()

    def test_first_letter_partitions_of_empty_list(self):
        assert first_letter_partitions(MultiplicityList(())) == [()]


class TestMultiplicityLists:
    """Tests for the corpus generator."""

    def test_all_compositions_up_to_total(self):
        lists = list(multiplicity_lists(3, 3))
        # compositions of 1, 2, 3 into at most 3 positive parts
        assert len(lists) == 1 + 2 + 4
        assert lists[0].counts == (1,)
        assert all(lst.total <= 3 for lst in lists)

    def test_letter_bound(self):
        assert all(len(lst) <= 2 for lst in multiplicity_lists(6, 2))

    def test_count_of_compositions(self):
        # compositions of t into at most t parts: 2^(t-1)
        lists = list(multiplicity_lists(5, 5))
        assert len(lists) == sum(2 ** (t - 1) for t in range(1, 6))
        assert len({lst.counts for lst in lists}) == len(lists)
