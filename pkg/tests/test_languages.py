"""Membership, padding axioms, and built-in languages."""

import pytest

from phasebench import (Alphabet, ConfigError, LanguageSpec,
                        check_paddability, even_weight_language,
                        first_is_two_language, odd_weight_language,
                        table_language, words_upto)


def test_decide_spot_values(odd_weight, first_is_two):
    assert odd_weight.decide((1,))            # weight 1
    assert not odd_weight.decide((1, 1))      # weight 2
    assert not first_is_two.decide(())        # empty word has no first symbol
    assert first_is_two.decide((2, 1))
    assert not first_is_two.decide((1, 2))


def test_pad_preserves_membership_exhaustively(odd_weight, first_is_two):
    for lang in (odd_weight, first_is_two):
        small = list(words_upto(lang.alphabet, 4))
        for x in small:
            for y in small:
                assert lang.decide(lang.pad(x, y)) == lang.decide(x)


def test_dec_recovers_payload(odd_weight):
    assert odd_weight.dec(odd_weight.pad((1,), (2, 1))) == (2, 1)
    # The case in which the padded prefix itself ends in equal pairs.
    assert odd_weight.dec(odd_weight.pad((2, 2), (1,))) == (1,)
    assert odd_weight.dec(odd_weight.pad((), ())) == ()


def test_dec_total_on_non_image_words(odd_weight):
    # No marker anywhere: still returns a word, flagged as non-image.
    assert odd_weight.dec((1, 1)) == (1,)
    assert not odd_weight.in_pad_image((1, 1))
    assert odd_weight.in_pad_image(odd_weight.pad((1, 2), (2,)))


@pytest.mark.parametrize("factory", [odd_weight_language,
                                     first_is_two_language,
                                     even_weight_language])
def test_builtins_paddable(factory):
    report = check_paddability(factory(Alphabet.of_size(2)), 4)
    assert report.passed
    assert report.checked_pairs == 31 * 31
    assert not report.axiom1_violations
    assert not report.axiom2_violations


def test_builtins_paddable_quaternary(quaternary):
    assert check_paddability(odd_weight_language(quaternary), 2).passed
    assert check_paddability(first_is_two_language(quaternary), 2).passed


class _PayloadDroppingPad(LanguageSpec):
    def pad(self, x, y):
        return x + self.marker


def test_broken_pad_is_reported(binary):
    # Negative control: a pad that drops the payload fails axiom 2.
    broken = _PayloadDroppingPad("broken", binary, lambda w: sum(w) % 2 == 1)
    report = check_paddability(broken, 2)
    assert not report.passed
    assert report.axiom2_violations


def test_marker_must_self_delimit(binary):
    with pytest.raises(ConfigError):
        LanguageSpec("bad", binary, lambda w: True, marker=(1, 1))


def test_table_language(binary):
    lang = table_language(binary, frozenset({(1, 2), (2, 1)}), max_len=4)
    assert lang.decide((1, 2))
    assert not lang.decide((1, 1))
    assert not lang.decide((1, 2, 1, 2, 1))  # outside the table: out
    with pytest.raises(ConfigError):
        table_language(binary, frozenset({(1, 1, 1)}), max_len=2)


def test_decide_is_pure(odd_weight):
    for w in words_upto(odd_weight.alphabet, 3):
        assert odd_weight.decide(w) == odd_weight.decide(w)
