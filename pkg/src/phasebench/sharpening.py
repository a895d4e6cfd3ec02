"""Pull-in transform that tightens the transition bounds.

Magnitudes at or above the pull-in distance are shifted toward zero by
exactly that distance; the finitely many inputs closer to the threshold
are repositioned from an explicit per-input reassignment table.  The one
hard constraint on a table is that the inputs it sends to zero must be
half members, half non-members.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .alphabet import Word, digits
from .errors import ConfigError
from .isomorphism import PIso
from .languages import LanguageSpec
from .parameter import ParamValue

# Smallest integer magnitude shift that clears the region where the
# envelope (7/2) * (1/sqrt 2)**n can still exceed 1/2.
PULL_IN = 6


def crossing_magnitude(numerator: int = 1, denominator: int = 7) -> float:
    """Image length n solving (7/2) * (1/sqrt 2)**n = 1/2, i.e. the base
    1/sqrt(2) logarithm of numerator/denominator."""
    return math.log(numerator / denominator) / math.log(1 / math.sqrt(2))


@dataclass(frozen=True)
class ReassignmentTable:
    """Per-input target values for every word whose magnitude is below the
    pull-in distance."""

    assignments: Dict[Word, float]

    def value_for(self, word: Word) -> float:
        try:
            return self.assignments[word]
        except KeyError:
            raise ConfigError(
                f"reassignment table has no entry for word '{digits(word)}'"
            ) from None

    def zero_pool(self) -> Tuple[Word, ...]:
        return tuple(sorted((w for w, v in self.assignments.items() if v == 0.0),
                            key=lambda w: (len(w), w)))


def sharpen_parameter(param: ParamValue, table: Optional[ReassignmentTable] = None,
                      word: Optional[Word] = None) -> float:
    """Sharpened parameter value.

    |tau| >= PULL_IN (n >= PULL_IN**2) is pure arithmetic: the sign is kept
    and the magnitude drops by PULL_IN.  Below that the value comes from
    the reassignment table, which is keyed per input word.
    """
    if param.n >= PULL_IN * PULL_IN:
        return param.sign * (math.sqrt(param.n) - PULL_IN)
    if table is None or word is None:
        raise ConfigError(
            f"|tau| = sqrt({param.n}) < {PULL_IN} needs a reassignment table "
            "entry (and the input word to look it up)")
    return table.value_for(word)


def generate_reassignment(lang: LanguageSpec, iso: PIso,
                          budget: int) -> ReassignmentTable:
    """Deterministic default table over all inputs with magnitude < PULL_IN.

    Inputs of the smallest realized image length are paired member with
    non-member, alternating in enumeration order, and sent to zero (so the
    zero pool is balanced by construction).  Every other input keeps its
    magnitude and takes the sign of its ground-truth membership, which
    preserves the original sign whenever the discriminator was right.
    """
    if budget < 1:
        raise ConfigError(f"reassignment budget must be >= 1, got {budget}")
    max_n = min(budget, PULL_IN * PULL_IN - 1)
    assignments: Dict[Word, float] = {}
    pool_members: List[Word] = []
    pool_others: List[Word] = []
    for x in iso.ball(1):
        (pool_members if lang.decide(x) else pool_others).append(x)
    paired = min(len(pool_members), len(pool_others))
    zero_pool = set(pool_members[:paired] + pool_others[:paired])
    for n in range(1, max_n + 1):
        magnitude = math.sqrt(n)
        for x in iso.ball(n):
            if x in zero_pool:
                assignments[x] = 0.0
            else:
                assignments[x] = magnitude if lang.decide(x) else -magnitude
    return ReassignmentTable(assignments)


@dataclass(frozen=True)
class ZeroBalanceReport:
    pool_size: int
    members: int
    non_members: int
    passed: bool


def verify_zero_balance(lang: LanguageSpec,
                        table: ReassignmentTable) -> ZeroBalanceReport:
    """Exactly half of the inputs reassigned to zero must be members."""
    pool = table.zero_pool()
    members = sum(1 for w in pool if lang.decide(w))
    non_members = len(pool) - members
    return ZeroBalanceReport(len(pool), members, non_members,
                             members == non_members)
