"""Words, weight, symmetry, parity counts, and enumeration order."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from phasebench import (Alphabet, ConfigError, digits, enumerate_words,
                        is_symmetric, parity_counts, rank, unrank, weight,
                        word_from_digits, words_upto)

words_bin = st.lists(st.integers(1, 2), max_size=8).map(tuple)


def test_weight_spot_values():
    assert weight(()) == 0
    assert weight((1, 2)) == 3
    assert weight((1, 2) + (2, 1)) == weight((1, 2)) + weight((2, 1))


@given(words_bin, words_bin)
def test_weight_additive_under_concatenation(x, y):
    assert weight(x + y) == weight(x) + weight(y)


def test_weight_additivity_exhaustive_small(binary):
    # Direct oracle over every pair with |x|, |y| <= 4.
    small = list(words_upto(binary, 4))
    for x in small:
        for y in small:
            assert weight(x + y) == weight(x) + weight(y)


def test_is_symmetric():
    assert is_symmetric(())
    assert is_symmetric((1, 2, 1, 2))
    assert not is_symmetric((1, 1, 2))   # odd length
    assert not is_symmetric((1, 2, 2, 1))


@pytest.mark.parametrize("n", range(0, 9))
def test_symmetric_census(binary, n):
    count = sum(1 for w in enumerate_words(binary, n) if is_symmetric(w))
    assert count == (binary.size ** (n // 2) if n % 2 == 0 else 0)


def test_symmetric_words_have_even_weight(binary):
    for n in range(0, 9):
        for w in enumerate_words(binary, n):
            if is_symmetric(w):
                assert weight(w) % 2 == 0


@pytest.mark.parametrize("size,max_n", [(2, 12), (4, 6)])
def test_parity_counts_match_enumeration(size, max_n):
    alphabet = Alphabet.of_size(size)
    for n in range(1, max_n + 1):
        counts = parity_counts(size, n)
        odd = sum(1 for w in enumerate_words(alphabet, n) if weight(w) % 2)
        total = size ** n
        assert counts.odd_count == odd
        assert counts.even_count == total - odd
        assert counts.even_count == counts.odd_count
        assert counts.even_count + counts.odd_count == total


def test_parity_counts_base_case():
    # Exactly half the single symbols have even index for even sizes.
    assert parity_counts(2, 1) == parity_counts(2, 1).__class__(1, 1, 1)
    counts4 = parity_counts(4, 1)
    assert (counts4.even_count, counts4.odd_count) == (2, 2)


def test_parity_counts_rejects_bad_alphabets():
    with pytest.raises(ConfigError):
        parity_counts(3, 2)
    with pytest.raises(ConfigError):
        parity_counts(0, 2)
    with pytest.raises(ValueError):
        parity_counts(2, 0)


def test_enumeration_is_lexicographic_and_complete(binary):
    words = list(enumerate_words(binary, 4))
    assert len(words) == 16
    assert len(set(words)) == 16
    assert words == sorted(words)
    assert words[0] == (1, 1, 1, 1)


def test_rank_unrank_round_trip(binary):
    assert unrank(binary, 2, 0) == (1, 1)
    assert rank(binary, unrank(binary, 2, 3)) == 3
    for n in range(0, 6):
        for r in range(binary.size ** n):
            assert rank(binary, unrank(binary, n, r)) == r
    for n in range(0, 5):
        for w in enumerate_words(binary, n):
            assert unrank(binary, n, rank(binary, w)) == w


@given(st.integers(1, 3).map(lambda k: 2 * k), st.integers(0, 5),
       st.integers(0, 10 ** 6))
def test_unrank_bijective_on_valid_ranks(size, n, seed):
    alphabet = Alphabet.of_size(size)
    r = seed % (size ** n)
    assert rank(alphabet, unrank(alphabet, n, r)) == r


def test_unrank_out_of_range(binary):
    with pytest.raises(ValueError):
        unrank(binary, 2, 4)
    with pytest.raises(ValueError):
        unrank(binary, 2, -1)


def test_alphabet_validation():
    with pytest.raises(ConfigError):
        Alphabet(("a",))
    with pytest.raises(ConfigError):
        Alphabet(("a", "b", "c"))
    with pytest.raises(ConfigError):
        Alphabet(("a", "a"))


def test_labels_sorted_for_reproducible_numbering():
    alphabet = Alphabet.from_labels(["b", "a"])
    assert alphabet.index_of("a") == 1
    assert alphabet.label_of(2) == "b"


def test_digit_string_round_trip(binary):
    assert word_from_digits("122", binary) == (1, 2, 2)
    assert digits((1, 2, 2)) == "122"
    assert word_from_digits("") == ()
    with pytest.raises(ConfigError):
        word_from_digits("103", binary)
