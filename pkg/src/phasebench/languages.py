"""Ground-truth deciders, padding/decoding, and built-in example languages.

The shared padding scheme is `x . marker . doubled(y)` where doubled(y)
repeats every symbol of y twice.  Decoding scans aligned pairs from the
right: the doubled payload consists of equal pairs only, and the marker's
final pair is unequal by construction, so the payload is self-delimiting
without a length prefix.  Markers have even weight so padding preserves
weight parity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, FrozenSet, List, Tuple

from .alphabet import Alphabet, Word, check_word, weight, words_upto
from .errors import ConfigError

# Even-weight marker whose trailing pair (2, 1) is unequal; valid for every
# alphabet with at least two symbols.
DEFAULT_MARKER: Word = (1, 2, 2, 1)


def doubled(word: Word) -> Word:
    out: List[int] = []
    for d in word:
        out.append(d)
        out.append(d)
    return tuple(out)


@dataclass(frozen=True, eq=False)
class LanguageSpec:
    """A language given by a total membership predicate plus pad/dec."""

    name: str
    alphabet: Alphabet
    membership: Callable[[Word], bool]
    marker: Word = DEFAULT_MARKER

    def __post_init__(self):
        check_word(self.alphabet, self.marker)
        if len(self.marker) < 2 or self.marker[-2] == self.marker[-1]:
            raise ConfigError(
                "pad marker must end in an unequal symbol pair to self-delimit")

    def decide(self, word: Word) -> bool:
        """Ground-truth membership (True = in the language)."""
        return bool(self.membership(word))

    def pad(self, x: Word, y: Word) -> Word:
        check_word(self.alphabet, x)
        check_word(self.alphabet, y)
        return x + self.marker + doubled(y)

    def dec(self, word: Word) -> Word:
        """Recover y from pad(x, y); total on all words, never raises."""
        i = len(word)
        while i >= 2 and word[i - 2] == word[i - 1]:
            i -= 2
        return word[i::2]

    def in_pad_image(self, word: Word) -> bool:
        """True iff the word has the pad layout (marker directly before payload)."""
        i = len(word)
        while i >= 2 and word[i - 2] == word[i - 1]:
            i -= 2
        m = len(self.marker)
        return i >= m and word[i - m:i] == self.marker


def decide(lang: LanguageSpec, word: Word) -> bool:
    return lang.decide(word)


def pad(lang: LanguageSpec, x: Word, y: Word) -> Word:
    return lang.pad(x, y)


def dec(lang: LanguageSpec, word: Word) -> Word:
    return lang.dec(word)


@dataclass(frozen=True)
class PaddabilityReport:
    """Outcome of exhaustively checking the two padding axioms."""

    checked_pairs: int
    axiom1_violations: tuple  # pairs (x, y) where pad changed membership
    axiom2_violations: tuple  # pairs (x, y) where dec(pad(x, y)) != y
    passed: bool


def check_paddability(lang: LanguageSpec, max_len: int) -> PaddabilityReport:
    """Test both padding axioms for every x, y with |x|, |y| <= max_len."""
    if max_len < 1:
        raise ConfigError(f"paddability check needs max_len >= 1, got {max_len}")
    words = list(words_upto(lang.alphabet, max_len))
    ax1: List[Tuple[Word, Word]] = []
    ax2: List[Tuple[Word, Word]] = []
    checked = 0
    for x in words:
        in_x = lang.decide(x)
        for y in words:
            checked += 1
            padded = lang.pad(x, y)
            if lang.decide(padded) != in_x:
                ax1.append((x, y))
            if lang.dec(padded) != y:
                ax2.append((x, y))
    return PaddabilityReport(checked, tuple(ax1), tuple(ax2),
                             not ax1 and not ax2)


def odd_weight_language(alphabet: Alphabet | None = None) -> LanguageSpec:
    """Words whose weight is odd.

    Pairs with the identity encoding to give a zero-configuration
    end-to-end demo in which the three-case decider is exactly errorless.
    """
    alphabet = alphabet or Alphabet.of_size(2)
    return LanguageSpec("odd_weight", alphabet, lambda w: weight(w) % 2 == 1)


def first_is_two_language(alphabet: Alphabet | None = None) -> LanguageSpec:
    """Non-empty words whose first symbol index is 2."""
    alphabet = alphabet or Alphabet.of_size(2)
    return LanguageSpec("first_is_two", alphabet,
                        lambda w: bool(w) and w[0] == 2)


def even_weight_language(alphabet: Alphabet | None = None) -> LanguageSpec:
    """Complement of odd_weight; useful as a negative control because its
    members sit exactly where the discriminator expects non-members."""
    alphabet = alphabet or Alphabet.of_size(2)
    return LanguageSpec("even_weight", alphabet, lambda w: weight(w) % 2 == 0)


def table_language(alphabet: Alphabet, members: FrozenSet[Word],
                   max_len: int, name: str = "table") -> LanguageSpec:
    """Language that is exactly a finite member set (everything else is out)."""
    for w in members:
        check_word(alphabet, w)
        if len(w) > max_len:
            raise ConfigError(
                f"table member {w!r} longer than declared maxLen {max_len}")
    member_set = frozenset(members)
    return LanguageSpec(name, alphabet, lambda w: w in member_set)


BUILTIN_LANGUAGES = {
    "odd_weight": odd_weight_language,
    "first_is_two": first_is_two_language,
    "even_weight": even_weight_language,
}
