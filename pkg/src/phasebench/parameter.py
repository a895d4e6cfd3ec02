"""The canonical parameter, balls, and signed parameter slices.

A parameter value is stored exactly as (sign, n) with tau = sign * sqrt(n),
so tau**2 == n holds with no rounding.  Floats appear only in output
formatting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

from .alphabet import Word
from .errors import UndefinedParameterError
from .isomorphism import PIso
from .roughp import discriminate


@dataclass(frozen=True)
class ParamValue:
    """Exact parameter value sign * sqrt(n) with n >= 1."""

    sign: int
    n: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        if self.n < 1:
            raise ValueError(f"parameter magnitude needs n >= 1, got {self.n}")

    @property
    def tau(self) -> float:
        return self.sign * math.sqrt(self.n)

    def key(self) -> Tuple[int, int]:
        """Sort key ordering values as the reals they represent."""
        return (self.sign, self.sign * self.n)

    def negated(self) -> "ParamValue":
        return ParamValue(-self.sign, self.n)


@dataclass(frozen=True)
class Ball:
    """Preimage of all length-n images."""

    n: int
    members: Tuple[Word, ...]


@dataclass(frozen=True)
class Slice:
    """All inputs sharing one exact parameter value."""

    param: ParamValue
    members: Tuple[Word, ...]


def gamma(iso: PIso, x: Word) -> ParamValue:
    """Canonical parameter of x: discriminator sign times sqrt(image length)."""
    n = iso.output_size(x)
    if n == 0:
        raise UndefinedParameterError(
            "canonical parameter undefined for the input with an empty image")
    return ParamValue(discriminate(iso, x), n)


def ball(iso: PIso, n: int) -> Ball:
    if n < 1:
        raise ValueError(f"ball requires n >= 1, got {n}")
    return Ball(n, iso.ball(n))


def param_slice(iso: PIso, sign: int, n: int) -> Slice:
    """The (sign, n) half of the ball, split by the discriminator."""
    param = ParamValue(sign, n)
    members = tuple(x for x in iso.ball(n) if discriminate(iso, x) == sign)
    return Slice(param, members)


def slice_pair(iso: PIso, n: int) -> Tuple[Slice, Slice]:
    """Both slices of one ball from a single enumeration pass."""
    pos, neg = [], []
    for x in ball(iso, n).members:
        (pos if discriminate(iso, x) == 1 else neg).append(x)
    return (Slice(ParamValue(1, n), tuple(pos)),
            Slice(ParamValue(-1, n), tuple(neg)))
