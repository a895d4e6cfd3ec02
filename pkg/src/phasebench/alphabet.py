"""Even-sized alphabets and words over them.

Words are plain tuples of 1-based symbol indices, so (1, 2) is the
two-symbol word whose digits are 1 and 2.  User-facing labels map to
indices through the alphabet's numbering; internally everything is
index arithmetic, which makes the weight function canonical.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

from .errors import ConfigError

Word = Tuple[int, ...]

EMPTY_WORD: Word = ()


@dataclass(frozen=True)
class Alphabet:
    """Ordered symbol labels; label at position i has index i+1."""

    symbols: tuple[str, ...]

    def __post_init__(self):
        size = len(self.symbols)
        if size < 2 or size % 2 != 0:
            raise ConfigError(f"alphabet size must be even and >= 2, got {size}")
        if len(set(self.symbols)) != size:
            raise ConfigError("alphabet labels must be distinct")

    @classmethod
    def of_size(cls, size: int) -> "Alphabet":
        return cls(tuple(str(i) for i in range(1, size + 1)))

    @classmethod
    def from_labels(cls, labels: Sequence[str]) -> "Alphabet":
        # Default numbering: lexicographic label order, for reproducibility.
        return cls(tuple(sorted(labels)))

    @property
    def size(self) -> int:
        return len(self.symbols)

    def index_of(self, label: str) -> int:
        try:
            return self.symbols.index(label) + 1
        except ValueError:
            raise ConfigError(f"unknown symbol label {label!r}") from None

    def label_of(self, index: int) -> str:
        if not 1 <= index <= self.size:
            raise ConfigError(f"symbol index {index} out of range 1..{self.size}")
        return self.symbols[index - 1]


def check_word(alphabet: Alphabet, word: Word) -> None:
    for d in word:
        if not 1 <= d <= alphabet.size:
            raise ConfigError(
                f"word digit {d} out of range 1..{alphabet.size} in {word!r}")


def weight(word: Word) -> int:
    """Sum of the symbol indices; additive under concatenation."""
    return sum(word)


def is_symmetric(word: Word) -> bool:
    """True iff the word is some z repeated twice (empty word included)."""
    half, rem = divmod(len(word), 2)
    return rem == 0 and word[:half] == word[half:]


@dataclass(frozen=True)
class ParityCounts:
    """How many length-n words have even/odd weight."""

    n: int
    even_count: int
    odd_count: int


def parity_counts(alphabet_size: int, n: int) -> ParityCounts:
    """Exact even/odd weight counts over all length-n words.

    Uses the recurrence seeded by the n = 1 split (half the symbol indices
    are even, half odd, because the alphabet size is even); the counts are
    equal at every length.
    """
    if alphabet_size < 2 or alphabet_size % 2 != 0:
        raise ConfigError(
            f"parity counts need an even alphabet size >= 2, got {alphabet_size}")
    if n < 1:
        raise ValueError(f"parity counts defined for n >= 1, got {n}")
    even = odd = alphabet_size // 2
    for _ in range(n - 1):
        even = odd = (alphabet_size // 2) * (even + odd)
    return ParityCounts(n, even, odd)


def enumerate_words(alphabet: Alphabet, n: int) -> Iterator[Word]:
    """All length-n words in lexicographic index order."""
    if n < 0:
        raise ValueError(f"word length must be >= 0, got {n}")
    return itertools.product(range(1, alphabet.size + 1), repeat=n)


def words_upto(alphabet: Alphabet, max_len: int) -> Iterator[Word]:
    """All words of length 0..max_len in (length, lexicographic) order."""
    for n in range(max_len + 1):
        yield from enumerate_words(alphabet, n)


def rank(alphabet: Alphabet, word: Word) -> int:
    """Position of the word within the lexicographic enumeration of its length."""
    check_word(alphabet, word)
    r = 0
    for d in word:
        r = r * alphabet.size + (d - 1)
    return r


def unrank(alphabet: Alphabet, n: int, r: int) -> Word:
    """Inverse of rank: the r-th length-n word, 0 <= r < size**n."""
    if n < 0:
        raise ValueError(f"word length must be >= 0, got {n}")
    if not 0 <= r < alphabet.size ** n:
        raise ValueError(f"rank {r} out of range for length {n}")
    digits = []
    for _ in range(n):
        r, d = divmod(r, alphabet.size)
        digits.append(d + 1)
    return tuple(reversed(digits))


def word_from_digits(text: str, alphabet: Alphabet | None = None) -> Word:
    """Parse a digit string like "122" into the word (1, 2, 2)."""
    try:
        word = tuple(int(ch) for ch in text)
    except ValueError:
        raise ConfigError(f"word {text!r} is not a digit string") from None
    if any(d < 1 for d in word):
        raise ConfigError(f"word {text!r} contains a digit below 1")
    if alphabet is not None:
        check_word(alphabet, word)
    return word


def digits(word: Word) -> str:
    """Render a word as the digit string used in configs and exports."""
    if any(d > 9 for d in word):
        raise ConfigError("digit strings only support symbol indices 1..9")
    return "".join(str(d) for d in word)
