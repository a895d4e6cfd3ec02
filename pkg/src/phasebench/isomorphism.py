"""Invertible word encodings: the identity and desk-scale table bijections.

A table encoding is a bijection on the finite domain of all words up to a
length budget.  The builder assigns images so that the three-case decider
downstream is errorless by construction: members of the language receive
odd-weight images (or symmetric overflow images), non-members receive
even-weight asymmetric images (or symmetric overflow images).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .alphabet import (Alphabet, Word, check_word, digits, enumerate_words,
                       is_symmetric, weight, word_from_digits, words_upto)
from .errors import BudgetExceededError, ConfigError, IsoInfeasibleError
from .languages import LanguageSpec

IDENTITY = "identity"
TABLE = "table"


@dataclass(frozen=True, eq=False)
class PIso:
    """Invertible encoding with an output-size map.

    kind "identity" covers all words; kind "table" covers words up to
    `budget` and raises BudgetExceededError beyond it.
    """

    kind: str
    alphabet: Alphabet
    budget: Optional[int] = None
    forward: Optional[Dict[Word, Word]] = None
    inverse: Optional[Dict[Word, Word]] = None

    def _check_domain(self, x: Word) -> None:
        check_word(self.alphabet, x)
        if self.budget is not None and len(x) > self.budget:
            raise BudgetExceededError(
                f"word of length {len(x)} exceeds encoding budget {self.budget}")

    def apply(self, x: Word) -> Word:
        self._check_domain(x)
        if self.kind == IDENTITY:
            return x
        try:
            return self.forward[x]
        except KeyError:
            raise BudgetExceededError(f"no image recorded for {x!r}") from None

    def invert(self, w: Word) -> Word:
        self._check_domain(w)
        if self.kind == IDENTITY:
            return w
        try:
            return self.inverse[w]
        except KeyError:
            raise BudgetExceededError(f"no preimage recorded for {w!r}") from None

    def output_size(self, x: Word) -> int:
        return len(self.apply(x))

    def ball(self, n: int) -> Tuple[Word, ...]:
        """Preimages of all length-n words, in image-lexicographic order."""
        if n < 0:
            raise ValueError(f"ball radius must be >= 0, got {n}")
        if self.budget is not None and n > self.budget:
            raise BudgetExceededError(
                f"ball radius {n} exceeds encoding budget {self.budget}")
        return tuple(self.invert(w) for w in enumerate_words(self.alphabet, n))


def identity_iso(alphabet: Alphabet) -> PIso:
    return PIso(IDENTITY, alphabet)


@dataclass(frozen=True)
class SlotBudget:
    """Image-slot capacities for one image length class."""

    n: int
    accept_capacity: int   # odd-weight images
    reject_capacity: int   # even-weight asymmetric images
    bottom_capacity: int   # symmetric images

    @property
    def total(self) -> int:
        return self.accept_capacity + self.reject_capacity + self.bottom_capacity


def slot_budget(alphabet: Alphabet, n: int) -> SlotBudget:
    k = alphabet.size
    total = k ** n
    if n == 0:
        return SlotBudget(0, 0, 0, 1)
    accept = total // 2
    bottom = k ** (n // 2) if n % 2 == 0 else 0
    return SlotBudget(n, accept, total - accept - bottom, bottom)


def build_table_iso(lang: LanguageSpec, budget: int) -> PIso:
    """Greedy slot assignment over words of length 0..budget.

    Inputs are processed in (length, rank) order.  Members take the
    smallest free odd-weight image, non-members the smallest free
    even-weight asymmetric image; when a side runs dry it overflows into
    the smallest free symmetric image.  Raises IsoInfeasibleError when an
    input cannot be placed.
    """
    if budget < 1:
        raise ConfigError(f"table encoding budget must be >= 1, got {budget}")
    domain = list(words_upto(lang.alphabet, budget))
    accept_slots = deque(w for w in domain if weight(w) % 2 == 1)
    bottom_slots = deque(w for w in domain if is_symmetric(w))
    reject_slots = deque(w for w in domain
                         if weight(w) % 2 == 0 and not is_symmetric(w))
    forward: Dict[Word, Word] = {}
    for x in domain:
        member = lang.decide(x)
        primary = accept_slots if member else reject_slots
        if primary:
            forward[x] = primary.popleft()
        elif bottom_slots:
            forward[x] = bottom_slots.popleft()
        else:
            side = "member" if member else "non-member"
            raise IsoInfeasibleError(
                f"no image slot left for {side} input '{digits(x)}' of length "
                f"{len(x)}: {'odd-weight' if member else 'even-asymmetric'} and "
                f"symmetric slots are exhausted")
    inverse = {img: src for src, img in forward.items()}
    return PIso(TABLE, lang.alphabet, budget, forward, inverse)


@dataclass(frozen=True)
class BijectionReport:
    checked: int
    duplicate_images: tuple
    missing_images: tuple
    round_trip_failures: tuple
    passed: bool


def verify_bijection(iso: PIso, budget: int) -> BijectionReport:
    """Check injectivity, surjectivity onto the domain, and round trips."""
    domain = list(words_upto(iso.alphabet, budget))
    seen: Dict[Word, Word] = {}
    dupes: List[Word] = []
    round_trip: List[Word] = []
    images: List[Word] = []
    for x in domain:
        w = iso.apply(x)
        images.append(w)
        if w in seen:
            dupes.append(w)
        else:
            seen[w] = x
        if iso.invert(w) != x:
            round_trip.append(x)
    missing = [w for w in domain if w not in seen]
    return BijectionReport(len(domain), tuple(dupes), tuple(missing),
                           tuple(round_trip),
                           not dupes and not missing and not round_trip)


def export_pairs(iso: PIso) -> List[List[str]]:
    """Table encoding as (input digit string, image digit string) pairs."""
    if iso.kind != TABLE:
        raise ConfigError("only table encodings can be exported")
    items = sorted(iso.forward.items(), key=lambda kv: (len(kv[0]), kv[0]))
    return [[digits(src), digits(img)] for src, img in items]


def import_table_iso(alphabet: Alphabet, pairs: Sequence[Sequence[str]],
                     budget: Optional[int] = None) -> PIso:
    """Rebuild a table encoding from exported pairs.

    Structural defects (duplicate images, missing words) are deliberately
    left for verify_bijection to report rather than raised here.
    """
    forward: Dict[Word, Word] = {}
    max_len = 0
    for entry in pairs:
        if len(entry) != 2:
            raise ConfigError(f"malformed table entry {entry!r}")
        src = word_from_digits(entry[0], alphabet)
        img = word_from_digits(entry[1], alphabet)
        if src in forward:
            raise ConfigError(f"duplicate input word {entry[0]!r} in table")
        forward[src] = img
        max_len = max(max_len, len(src), len(img))
    inverse: Dict[Word, Word] = {}
    for src, img in forward.items():
        inverse.setdefault(img, src)
    return PIso(TABLE, alphabet, budget if budget is not None else max_len,
                forward, inverse)
