"""The three-case decider, its tie-breaker, and per-length-class counts.

The decider inspects the encoded image of an input: odd weight means
accept, even weight and asymmetric means reject, symmetric means "do not
know".  Because symmetric words have even weight, the three cases
partition every image class.  The discriminator collapses the unknown
case to +1/-1 by the weight parity of the repeated half, which splits the
symmetric words of every even length exactly in half.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .alphabet import Word, is_symmetric, weight, words_upto
from .errors import ContractViolationError
from .exactnum import SQRT_HALF, Root2Num
from .isomorphism import PIso
from .languages import LanguageSpec


class Verdict(enum.Enum):
    ACCEPT = "accept"
    REJECT = "reject"
    BOTTOM = "bottom"


def verdict_of_image(w: Word) -> Verdict:
    if weight(w) % 2 == 1:
        return Verdict.ACCEPT
    if is_symmetric(w):
        return Verdict.BOTTOM
    return Verdict.REJECT


def decide_rough(iso: PIso, x: Word) -> Verdict:
    """Accept / Reject / Bottom from the encoded image of x."""
    return verdict_of_image(iso.apply(x))


def qprime(w: Word) -> int:
    """Tie-breaker on non-empty symmetric words: +1 iff the half has odd weight."""
    if not w or not is_symmetric(w):
        raise ContractViolationError(
            f"tie-breaker requires a non-empty symmetric word, got {w!r}")
    half = w[:len(w) // 2]
    return 1 if weight(half) % 2 == 1 else -1


def discriminate(iso: PIso, x: Word) -> int:
    """+1/-1 verdict: agrees with the decider off Bottom, tie-breaks on it."""
    w = iso.apply(x)
    v = verdict_of_image(w)
    if v is Verdict.ACCEPT:
        return 1
    if v is Verdict.REJECT:
        return -1
    return qprime(w)


def psi(p: int) -> Verdict:
    if p == 1:
        return Verdict.ACCEPT
    if p == -1:
        return Verdict.REJECT
    raise ValueError(f"psi expects +1 or -1, got {p!r}")


@dataclass(frozen=True)
class ClassCounts:
    """Decider verdict counts over one image length class."""

    n: int
    accept_count: int
    reject_count: int
    bottom_count: int
    total: int


def class_counts(iso: PIso, n: int) -> ClassCounts:
    """Exhaustive verdict tally over the preimage of all length-n words."""
    accept = reject = bottom = 0
    for x in iso.ball(n):
        v = decide_rough(iso, x)
        if v is Verdict.ACCEPT:
            accept += 1
        elif v is Verdict.REJECT:
            reject += 1
        else:
            bottom += 1
    return ClassCounts(n, accept, reject, bottom, accept + reject + bottom)


def bottom_fraction(iso: PIso, n: int) -> Fraction:
    """Fraction of the length-n class on which the decider answers Bottom."""
    counts = class_counts(iso, n)
    return Fraction(counts.bottom_count, counts.total)


def within_dnk_bound(fraction: Fraction, n: int) -> bool:
    """Exact test of fraction <= (1/sqrt 2)**n."""
    return Root2Num.of(fraction) <= SQRT_HALF ** n


def verify_errorless(lang: LanguageSpec, iso: PIso, max_len: int) -> tuple:
    """Inputs (length <= max_len) where a definite verdict contradicts truth."""
    bad = []
    for x in words_upto(lang.alphabet, max_len):
        v = decide_rough(iso, x)
        if v is Verdict.ACCEPT and not lang.decide(x):
            bad.append((x, v))
        elif v is Verdict.REJECT and lang.decide(x):
            bad.append((x, v))
    return tuple(bad)
