"""Accepting fractions, bound envelopes, threshold extraction, density
counting, the three phase-transition requirements, and scan assembly.

All measured quantities are exact rationals; bound comparisons happen in
Q(sqrt 2).  Floats appear only in window geometry and rendered output.
"""

from __future__ import annotations

import dataclasses
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from typing import List, Optional, Sequence, Tuple, Union

from .alphabet import Alphabet, enumerate_words
from .errors import ConfigError, EmptySliceError
from .exactnum import SQRT_HALF, Root2Num, clamp01
from .isomorphism import PIso
from .languages import LanguageSpec, check_paddability
from .parameter import ParamValue, Slice
from .roughp import Verdict, class_counts, qprime, verdict_of_image

CANONICAL = "canonical"
INVERTED = "inverted"

_EPS = 1e-9


# ---------------------------------------------------------------------------
# Bound parameters and the acceptance bounding envelope
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundParams:
    """Envelope constant c and polynomial coefficients (ascending powers)."""

    c: Union[Root2Num, Fraction] = SQRT_HALF
    poly: Tuple[Union[int, Fraction], ...] = (4,)

    def __post_init__(self):
        c = Root2Num.of(self.c)
        object.__setattr__(self, "c", c)
        if not (Root2Num.of(0) < c < Root2Num.of(1)):
            raise ConfigError("bound constant c must lie strictly in (0, 1)")
        if not self.poly:
            raise ConfigError("polynomial needs at least one coefficient")
        if any(coef < 0 for coef in self.poly):
            raise ConfigError("polynomial coefficients must be nonnegative")
        if self.poly_value(1) <= 0:
            raise ConfigError("polynomial must be positive for n >= 1")

    def poly_value(self, n: int):
        return sum(coef * n ** i for i, coef in enumerate(self.poly))

    def c_pow(self, n: int) -> Root2Num:
        return Root2Num.of(self.c) ** n

    def envelope(self, n: int) -> Root2Num:
        """Poly(n) * c**n, exact."""
        return Root2Num.of(self.poly_value(n)) * self.c_pow(n)

    def describe_c(self) -> str:
        c = Root2Num.of(self.c)
        if c == SQRT_HALF:
            return "sqrt(1/2)"
        f = c.as_fraction()
        return f"{f.numerator}/{f.denominator}"


def sqrt_half_envelope(poly_value, n: int) -> Root2Num:
    """Poly(n) * (1/sqrt 2)**n with the constant fixed, for the balance
    side condition."""
    return Root2Num.of(poly_value) * SQRT_HALF ** n


def bound_curve(param: ParamValue, bounds: BoundParams) -> Tuple[Root2Num, Root2Num]:
    """Exact (lower, upper) acceptance bounds at one parameter value,
    clamped to [0, 1]; canonical orientation."""
    env = bounds.envelope(param.n)
    if param.sign > 0:
        return clamp01(Root2Num.of(1) - env), Root2Num.of(1)
    return Root2Num.of(0), clamp01(env)


# ---------------------------------------------------------------------------
# Per-slice statistics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SliceStats:
    sign: int
    n: int
    slice_size: int
    accepted_count: int      # ground-truth members inside the slice
    bottom_in_slice: int
    ball_bottom: int         # decider Bottom count over the whole ball
    ball_total: int
    accepting_fraction: Optional[Fraction]
    lower_bound: Root2Num
    upper_bound: Root2Num

    @property
    def param(self) -> ParamValue:
        return ParamValue(self.sign, self.n)

    @property
    def tau(self) -> float:
        return self.param.tau


@dataclass(frozen=True)
class BallTally:
    """Single-pass enumeration of one image length class."""

    n: int
    total: int
    bottom_count: int
    pos_size: int
    pos_accepted: int
    pos_bottoms: int
    neg_size: int
    neg_accepted: int
    neg_bottoms: int
    in_correct: int          # member input with a definite Accept
    out_correct: int         # non-member input with a definite Reject


def tally_ball(lang: LanguageSpec, iso: PIso, n: int) -> BallTally:
    pos_size = pos_acc = pos_bot = 0
    neg_size = neg_acc = neg_bot = 0
    in_ok = out_ok = 0
    for image in enumerate_words(lang.alphabet, n):
        x = iso.invert(image)
        member = lang.decide(x)
        v = verdict_of_image(image)
        if v is Verdict.ACCEPT:
            sign = 1
            if member:
                in_ok += 1
        elif v is Verdict.REJECT:
            sign = -1
            if not member:
                out_ok += 1
        else:
            sign = qprime(image)
        if sign == 1:
            pos_size += 1
            pos_acc += member
            pos_bot += v is Verdict.BOTTOM
        else:
            neg_size += 1
            neg_acc += member
            neg_bot += v is Verdict.BOTTOM
    return BallTally(n, pos_size + neg_size, pos_bot + neg_bot,
                     pos_size, pos_acc, pos_bot,
                     neg_size, neg_acc, neg_bot, in_ok, out_ok)


def accepting_fraction(lang: LanguageSpec, slc: Slice) -> Fraction:
    """Exact fraction of the slice belonging to the language."""
    if not slc.members:
        raise EmptySliceError(
            f"accepting fraction undefined on empty slice {slc.param!r}")
    members_in = sum(1 for x in slc.members if lang.decide(x))
    return Fraction(members_in, len(slc.members))


def _stats_from_tally(tally: BallTally, bounds: BoundParams) -> List[SliceStats]:
    rows = []
    for sign, size, accepted, bottoms in (
            (-1, tally.neg_size, tally.neg_accepted, tally.neg_bottoms),
            (1, tally.pos_size, tally.pos_accepted, tally.pos_bottoms)):
        lower, upper = bound_curve(ParamValue(sign, tally.n), bounds)
        frac = Fraction(accepted, size) if size else None
        rows.append(SliceStats(sign, tally.n, size, accepted, bottoms,
                               tally.bottom_count, tally.total, frac,
                               lower, upper))
    return rows


# ---------------------------------------------------------------------------
# Discriminator error statistic F
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FStat:
    n: int
    p: int
    value: Fraction
    bound: Root2Num          # (7/2) * c**n
    exceeds_bound: bool


def f_from_counts(total: int, bottom: int, p: int) -> Fraction:
    """F = bottom / (total + p * bottom); strictly increasing in bottom."""
    denom = total + p * bottom
    if denom <= 0:
        raise ValueError("degenerate counts: slice would be empty")
    return Fraction(bottom, denom)


def compute_F(iso: PIso, n: int, p: int,
              bounds: Optional[BoundParams] = None) -> FStat:
    if p not in (1, -1):
        raise ValueError(f"p must be +1 or -1, got {p!r}")
    counts = class_counts(iso, n)
    value = f_from_counts(counts.total, counts.bottom_count, p)
    c = Root2Num.of(bounds.c) if bounds is not None else SQRT_HALF
    bound = Root2Num.of(Fraction(7, 2)) * c ** n
    return FStat(n, p, value, bound, Root2Num.of(value) > bound)


# ---------------------------------------------------------------------------
# Acceptance bound verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundRow:
    sign: int
    n: int
    fraction: Optional[Fraction]
    lower: Root2Num
    upper: Root2Num
    passed: bool


@dataclass(frozen=True)
class AccBoundsReport:
    rows: Tuple[BoundRow, ...]
    violations: Tuple[BoundRow, ...]
    warnings: Tuple[str, ...]
    passed: bool


def verify_acc_bounds(lang: LanguageSpec, iso: PIso, bounds: BoundParams,
                      max_n: int, precondition_len: int = 3) -> AccBoundsReport:
    """Check every realized slice fraction against its envelope bounds.

    Preconditions (paddability, balance) are probed and reported as
    warnings, never as bound violations.
    """
    warnings: List[str] = []
    pad_report = check_paddability(lang, precondition_len)
    if not pad_report.passed:
        warnings.append(
            f"paddability violated on {len(pad_report.axiom1_violations)} / "
            f"{len(pad_report.axiom2_violations)} pairs up to length "
            f"{precondition_len}")
    balance = balance_check(lang, iso, bounds, max_n)
    if balance.failing_n:
        warnings.append(
            "balance margin below 1/Poly(n) at n in "
            f"{sorted(balance.failing_n)}")
    rows: List[BoundRow] = []
    for n in range(1, max_n + 1):
        tally = tally_ball(lang, iso, n)
        for stats in _stats_from_tally(tally, bounds):
            if stats.accepting_fraction is None:
                rows.append(BoundRow(stats.sign, n, None,
                                     stats.lower_bound, stats.upper_bound, True))
                continue
            frac = Root2Num.of(stats.accepting_fraction)
            ok = stats.lower_bound <= frac <= stats.upper_bound
            rows.append(BoundRow(stats.sign, n, stats.accepting_fraction,
                                 stats.lower_bound, stats.upper_bound, ok))
    violations = tuple(r for r in rows if not r.passed)
    return AccBoundsReport(tuple(rows), violations, tuple(warnings),
                           not violations)


# ---------------------------------------------------------------------------
# Balance (margins of correctly decided members / non-members)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MarginRow:
    n: int
    in_margin: Fraction
    out_margin: Fraction
    required: Fraction
    passed: bool


@dataclass(frozen=True)
class BalanceReport:
    rows: Tuple[MarginRow, ...]
    side_condition_ok: bool
    failing_n: Tuple[int, ...]
    passed: bool


def balance_check(lang: LanguageSpec, iso: PIso, bounds: BoundParams,
                  max_n: int) -> BalanceReport:
    """Per-n fractions of the ball decided correctly on each side, compared
    against 1/Poly(n); also checks that Poly(n) * (1/sqrt 2)**n is
    non-increasing over the scanned range."""
    tallies = [tally_ball(lang, iso, n) for n in range(1, max_n + 1)]
    return balance_from_tallies(tallies, bounds, max_n)


# ---------------------------------------------------------------------------
# Threshold
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ThresholdResult:
    value: Optional[float]
    param: Optional[ParamValue]
    diagnostic: Optional[str]


def _slice_label(stats: SliceStats) -> str:
    return f"(sign={stats.sign:+d}, n={stats.n}, A={stats.accepting_fraction})"


def threshold(slices: Sequence[SliceStats],
              orientation: str = CANONICAL) -> ThresholdResult:
    """Minimum threshold value over realized slices, if one exists.

    Canonical orientation: every realized value above the threshold must
    have accepting fraction > 1/2 and every realized value at or below it
    must not.  Inverted orientation mirrors the roles of the two sides.
    """
    realized = [s for s in slices if s.accepting_fraction is not None]
    half = Fraction(1, 2)
    if orientation == CANONICAL:
        upper_side = [s for s in realized if s.accepting_fraction > half]
        lower_side = [s for s in realized if s.accepting_fraction <= half]
    elif orientation == INVERTED:
        upper_side = [s for s in realized if s.accepting_fraction < half]
        lower_side = [s for s in realized if s.accepting_fraction >= half]
    else:
        raise ValueError(f"unknown orientation {orientation!r}")
    if not realized:
        return ThresholdResult(None, None, "no realized slices")
    if not upper_side:
        worst = max(realized, key=lambda s: s.param.key())
        return ThresholdResult(None, None,
                               "no realized slice lies on the above-threshold "
                               f"side; topmost slice {_slice_label(worst)}")
    if not lower_side:
        return ThresholdResult(None, None,
                               "every realized slice lies on the "
                               "above-threshold side; no minimum exists")
    t = max(lower_side, key=lambda s: s.param.key())
    u = min(upper_side, key=lambda s: s.param.key())
    if t.param.key() > u.param.key():
        return ThresholdResult(None, None,
                               f"slice {_slice_label(t)} sits above "
                               f"{_slice_label(u)}; no value separates the sides")
    return ThresholdResult(t.param.tau, t.param, None)


def threshold_biconditional_holds(slices: Sequence[SliceStats],
                                  result: ThresholdResult,
                                  orientation: str = CANONICAL) -> bool:
    """Directly re-assert the defining biconditional over realized slices."""
    if result.param is None:
        return False
    half = Fraction(1, 2)
    t_key = result.param.key()
    for s in slices:
        if s.accepting_fraction is None:
            continue
        above = s.param.key() > t_key
        if orientation == CANONICAL:
            if above != (s.accepting_fraction > half):
                return False
        else:
            if above != (s.accepting_fraction < half):
                return False
    return True


# ---------------------------------------------------------------------------
# Density counting
# ---------------------------------------------------------------------------

def geometric_series_total(size: int, e_squared: int) -> int:
    """Sum of size**j for j = 0..e_squared."""
    return (size ** (e_squared + 1) - 1) // (size - 1)


def geometric_series_range(size: int, lo: int, hi: int) -> int:
    """Sum of size**j for j = lo..hi."""
    return (size ** (hi + 1) - size ** lo) // (size - 1)


def fixed_width_count(size: int, e1: int, delta: int) -> int:
    """Closed form for the window [e1, e1 + delta] on the parameter axis."""
    return size ** (e1 * e1) * (
        size ** (2 * delta * e1 + delta * delta + 1) - 1) // (size - 1)


@dataclass(frozen=True)
class DensityReport:
    e1: Fraction
    e2: Fraction
    delta: Fraction
    lo: int                                # smallest counted image length
    hi: int                                # largest counted image length
    enumerated_count: int
    closed_form_count: Optional[int]       # only when e1^2, e2^2 are integers
    count_excluding_empty: int             # drops the single length-0 input


def _as_fraction(value) -> Fraction:
    if isinstance(value, float):
        return Fraction(str(value))
    return Fraction(value)


def density_counts(alphabet: Alphabet, e1, e2) -> DensityReport:
    """Count inputs whose parameter magnitude lies in [e1, e2], both signs.

    The magnitude is sqrt(image length) and encodings are bijections, so
    the count per image length j is exactly size**j; the enumerated count
    iterates those classes while the closed form evaluates the geometric
    series.  Both the convention including the length-0 input and the one
    excluding it are reported.
    """
    e1 = _as_fraction(e1)
    e2 = _as_fraction(e2)
    if e1 < 0 or e2 <= e1:
        raise ConfigError(f"need 0 <= e1 < e2, got e1={e1}, e2={e2}")
    lo = math.ceil(e1 * e1)
    hi = math.floor(e2 * e2)
    enumerated = 0
    for j in range(lo, hi + 1):
        enumerated += sum(1 for _ in enumerate_words(alphabet, j))
    closed: Optional[int] = None
    if (e1 * e1).denominator == 1 and (e2 * e2).denominator == 1:
        closed = geometric_series_range(alphabet.size, lo, hi)
    excluding = enumerated - 1 if lo == 0 else enumerated
    return DensityReport(e1, e2, e2 - e1, lo, hi, enumerated, closed, excluding)


# ---------------------------------------------------------------------------
# Requirement 3: exponential growth away from the threshold
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WindowRow:
    lo: float
    hi: float
    count: int
    full: bool       # window lies inside the realized parameter range
    empty: bool


@dataclass(frozen=True)
class Req3Result:
    base: Fraction
    pos_windows: Tuple[WindowRow, ...]
    neg_windows: Tuple[WindowRow, ...]
    pos_ratios: Tuple[Fraction, ...]
    neg_ratios: Tuple[Fraction, ...]
    notes: Tuple[str, ...]
    passed: bool


def _windows_for_side(slices: Sequence[SliceStats], t: float, delta: float,
                      radius: float, direction: int) -> List[WindowRow]:
    taus = [s.tau for s in slices]
    if not taus:
        return []
    lo_lim, hi_lim = min(taus), max(taus)
    rows: List[WindowRow] = []
    k = 0
    while True:
        if direction > 0:
            lo = t + radius + k * delta
            hi = lo + delta
            if lo > hi_lim + _EPS:
                break
            full = hi <= hi_lim + _EPS
        else:
            hi = t - radius - k * delta
            lo = hi - delta
            if hi < lo_lim - _EPS:
                break
            full = lo >= lo_lim - _EPS
        count = sum(s.slice_size for s in slices
                    if lo - _EPS <= s.tau <= hi + _EPS)
        rows.append(WindowRow(lo, hi, count, full, count == 0))
        k += 1
    return rows


def _evaluate_side(rows: Sequence[WindowRow], base: Fraction):
    usable = [r for r in rows if r.full and not r.empty]
    notes: List[str] = []
    if any(r.empty for r in rows if r.full):
        notes.append("empty full window flagged (not failed)")
    if len(usable) < 2:
        notes.append("fewer than two usable windows; growth check vacuous")
        return (), True, notes
    ratios = tuple(Fraction(b.count, a.count)
                   for a, b in zip(usable, usable[1:]))
    monotone = all(b.count >= a.count for a, b in zip(usable, usable[1:]))
    grows = all(r >= base for r in ratios)
    return ratios, monotone and grows, notes


def requirement3_check(slices: Sequence[SliceStats],
                       threshold_result: ThresholdResult,
                       delta: float, exempt_radius: float,
                       growth_base: Fraction) -> Req3Result:
    """Window counts moving away from the threshold must be non-decreasing
    and grow by at least `growth_base` between successive full windows.
    Windows inside `exempt_radius` of the threshold are exempt; partial
    and empty windows are flagged but never counted as failures."""
    if delta <= 0:
        raise ConfigError(f"window width delta must be > 0, got {delta}")
    if threshold_result.value is None:
        return Req3Result(growth_base, (), (), (), (),
                          ("no threshold value; growth check not applicable",),
                          False)
    t = threshold_result.value
    realized = [s for s in slices if s.accepting_fraction is not None]
    pos = _windows_for_side(realized, t, delta, exempt_radius, 1)
    neg = _windows_for_side(realized, t, delta, exempt_radius, -1)
    pos_ratios, pos_ok, pos_notes = _evaluate_side(pos, growth_base)
    neg_ratios, neg_ok, neg_notes = _evaluate_side(neg, growth_base)
    notes = tuple(f"positive side: {n}" for n in pos_notes) + \
        tuple(f"negative side: {n}" for n in neg_notes)
    return Req3Result(growth_base, tuple(pos), tuple(neg),
                      pos_ratios, neg_ratios, notes, pos_ok and neg_ok)


# ---------------------------------------------------------------------------
# Requirements 1 and 2: monotone envelope approach, measured fractions inside
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Req12Result:
    requirement1: bool
    requirement2: bool
    checks: Tuple[Tuple[str, bool], ...]
    violations: Tuple[str, ...]


def _rising_side(side: Sequence[SliceStats], bounds: BoundParams,
                 label: str):
    """Side whose lower bound must rise toward 1 moving away from zero."""
    checks = []
    violations = []
    if not side:
        return False, [(f"{label}: no realized slices", False)], violations
    lowers = [s.lower_bound for s in side]
    monotone = all(b >= a for a, b in zip(lowers, lowers[1:]))
    checks.append((f"{label}: lower bound monotone", monotone))
    last = side[-1]
    approach = (Root2Num.of(1) - last.lower_bound) <= bounds.envelope(last.n)
    checks.append((f"{label}: lower bound approaches 1", approach))
    measured = True
    for s in side:
        if s.accepting_fraction is None:
            continue
        if Root2Num.of(s.accepting_fraction) < s.lower_bound:
            measured = False
            violations.append(f"{label}: fraction below lower bound at "
                              f"{_slice_label(s)}")
    checks.append((f"{label}: measured fractions above lower bound", measured))
    return monotone and approach and measured, checks, violations


def _falling_side(side: Sequence[SliceStats], bounds: BoundParams,
                  label: str):
    """Side whose upper bound must fall toward 0 moving away from zero."""
    checks = []
    violations = []
    if not side:
        return False, [(f"{label}: no realized slices", False)], violations
    uppers = [s.upper_bound for s in side]
    monotone = all(b <= a for a, b in zip(uppers, uppers[1:]))
    checks.append((f"{label}: upper bound monotone", monotone))
    last = side[-1]
    approach = last.upper_bound <= bounds.envelope(last.n)
    checks.append((f"{label}: upper bound approaches 0", approach))
    measured = True
    for s in side:
        if s.accepting_fraction is None:
            continue
        if Root2Num.of(s.accepting_fraction) > s.upper_bound:
            measured = False
            violations.append(f"{label}: fraction above upper bound at "
                              f"{_slice_label(s)}")
    checks.append((f"{label}: measured fractions below upper bound", measured))
    return monotone and approach and measured, checks, violations


def requirement12_check(slices: Sequence[SliceStats], bounds: BoundParams,
                        orientation: str = CANONICAL) -> Req12Result:
    """Limit requirements on both sides of the transition, asserted of the
    bounds (with measured fractions respecting them), not of the measured
    fractions' own monotonicity."""
    pos = sorted((s for s in slices if s.sign == 1), key=lambda s: s.n)
    neg = sorted((s for s in slices if s.sign == -1), key=lambda s: s.n)
    if orientation == CANONICAL:
        r1, c1, v1 = _rising_side(pos, bounds, "tau>0")
        r2, c2, v2 = _falling_side(neg, bounds, "tau<0")
    elif orientation == INVERTED:
        r1, c1, v1 = _falling_side(pos, bounds, "tau>0")
        r2, c2, v2 = _rising_side(neg, bounds, "tau<0")
    else:
        raise ValueError(f"unknown orientation {orientation!r}")
    return Req12Result(r1, r2, tuple(c1 + c2), tuple(v1 + v2))


# ---------------------------------------------------------------------------
# Scan assembly and parameter inversion
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ScanReport:
    alphabet_size: int
    language_name: str
    iso_kind: str
    budget: int
    orientation: str
    bounds: BoundParams
    delta: float
    exempt_radius: float
    growth_base: Fraction
    slices: Tuple[SliceStats, ...]
    empty_slices: Tuple[Tuple[int, int], ...]
    skipped_undefined: int
    threshold: ThresholdResult
    balance: BalanceReport
    req12: Req12Result
    req3: Req3Result

    @property
    def requirement1(self) -> bool:
        return self.req12.requirement1

    @property
    def requirement2(self) -> bool:
        return self.req12.requirement2

    @property
    def requirement3(self) -> bool:
        return self.req3.passed


def _resolve_workers(explicit: Optional[int]) -> int:
    if explicit is not None:
        if explicit < 1:
            raise ConfigError(f"worker count must be >= 1, got {explicit}")
        return explicit
    env = os.environ.get("PHASEBENCH_THREADS")
    if env:
        try:
            value = int(env)
        except ValueError:
            raise ConfigError(
                f"PHASEBENCH_THREADS must be an integer, got {env!r}") from None
        if value < 1:
            raise ConfigError("PHASEBENCH_THREADS must be >= 1")
        return value
    return min(8, os.cpu_count() or 1)


def _finalize(stats: Sequence[SliceStats], orientation: str,
              bounds: BoundParams, delta: float, exempt_radius: float,
              growth_base: Fraction, balance: BalanceReport,
              skipped: int, meta: dict) -> ScanReport:
    ordered = tuple(sorted((s for s in stats if s.slice_size > 0),
                           key=lambda s: (s.n, s.sign)))
    empty = tuple(sorted((s.sign, s.n) for s in stats if s.slice_size == 0))
    thr = threshold(ordered, orientation)
    req12 = requirement12_check(ordered, bounds, orientation)
    req3 = requirement3_check(ordered, thr, delta, exempt_radius, growth_base)
    return ScanReport(meta["alphabet_size"], meta["language_name"],
                      meta["iso_kind"], meta["budget"], orientation, bounds,
                      delta, exempt_radius, growth_base, ordered, empty,
                      skipped, thr, balance, req12, req3)


def build_scan(lang: LanguageSpec, iso: PIso, bounds: BoundParams,
               budget: int, delta: float = 1.0, exempt_radius: float = 1.0,
               growth_base: Optional[Fraction] = None,
               workers: Optional[int] = None) -> ScanReport:
    """Exhaustive per-slice scan up to the image-length budget.

    Length classes are tallied in parallel (worker count capped by the
    PHASEBENCH_THREADS environment variable) and merged in sorted order,
    so the report is identical for any worker count.
    """
    if budget < 1:
        raise ConfigError(f"scan budget must be >= 1, got {budget}")
    base = Fraction(lang.alphabet.size) if growth_base is None \
        else _as_fraction(growth_base)
    if base <= 1:
        raise ConfigError(f"growth base must exceed 1, got {base}")
    n_workers = _resolve_workers(workers)
    with ThreadPoolExecutor(max_workers=n_workers) as pool:
        tallies = list(pool.map(partial(tally_ball, lang, iso),
                                range(1, budget + 1)))
    stats: List[SliceStats] = []
    for tally in tallies:
        stats.extend(_stats_from_tally(tally, bounds))
    balance = balance_from_tallies(tallies, bounds, budget)
    meta = {"alphabet_size": lang.alphabet.size, "language_name": lang.name,
            "iso_kind": iso.kind, "budget": budget}
    return _finalize(stats, CANONICAL, bounds, delta, exempt_radius, base,
                     balance, 1, meta)


def balance_from_tallies(tallies: Sequence[BallTally], bounds: BoundParams,
                         max_n: int) -> BalanceReport:
    rows: List[MarginRow] = []
    failing: List[int] = []
    for tally in sorted(tallies, key=lambda t: t.n):
        in_margin = Fraction(tally.in_correct, tally.total)
        out_margin = Fraction(tally.out_correct, tally.total)
        required = Fraction(1) / Fraction(bounds.poly_value(tally.n))
        ok = in_margin >= required and out_margin >= required
        rows.append(MarginRow(tally.n, in_margin, out_margin, required, ok))
        if not ok:
            failing.append(tally.n)
    side_ok = all(
        sqrt_half_envelope(bounds.poly_value(n + 1), n + 1)
        <= sqrt_half_envelope(bounds.poly_value(n), n)
        for n in range(1, max_n))
    return BalanceReport(tuple(rows), side_ok, tuple(failing),
                         side_ok and not failing)


def invert_scan(report: ScanReport) -> ScanReport:
    """Reindex the scan by the negated parameter; an involution.

    Each slice keeps its measured counts and its bound pair, only the sign
    flips; threshold and requirement checks are re-derived under the
    opposite orientation."""
    flipped = [dataclasses.replace(s, sign=-s.sign) for s in report.slices]
    orientation = INVERTED if report.orientation == CANONICAL else CANONICAL
    meta = {"alphabet_size": report.alphabet_size,
            "language_name": report.language_name,
            "iso_kind": report.iso_kind, "budget": report.budget}
    out = _finalize(flipped, orientation, report.bounds, report.delta,
                    report.exempt_radius, report.growth_base, report.balance,
                    report.skipped_undefined, meta)
    empty = tuple(sorted((-sign, n) for sign, n in report.empty_slices))
    return dataclasses.replace(out, empty_slices=empty)
