"""Fractions, envelopes, F statistic, balance, threshold, requirements."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from phasebench import (BoundParams, EmptySliceError, ParamValue, Slice,
                        accepting_fraction, balance_check, bound_curve,
                        build_scan, build_table_iso, compute_F,
                        even_weight_language, f_from_counts,
                        invert_scan, requirement3_check, requirement12_check,
                        slice_pair, threshold, threshold_biconditional_holds,
                        verify_acc_bounds)
from phasebench.exactnum import SQRT_HALF, Root2Num
from phasebench.transition import CANONICAL, SliceStats, ThresholdResult


def make_stats(sign, n, size, accepted, bounds=None, bottoms=0):
    bounds = bounds or BoundParams()
    lower, upper = bound_curve(ParamValue(sign, n), bounds)
    frac = Fraction(accepted, size) if size else None
    return SliceStats(sign, n, size, accepted, bottoms, 2 * bottoms,
                      2 * size, frac, lower, upper)


# -- accepting fractions ----------------------------------------------------

def test_accepting_fraction_spot_values(odd_weight, identity):
    pos4, neg4 = slice_pair(identity, 4)
    assert accepting_fraction(odd_weight, pos4) == Fraction(8, 10)
    assert accepting_fraction(odd_weight, neg4) == 0
    pos1, _ = slice_pair(identity, 1)
    assert accepting_fraction(odd_weight, pos1) == 1
    pos2, _ = slice_pair(identity, 2)
    assert accepting_fraction(odd_weight, pos2) == Fraction(2, 3)


def test_accepting_fraction_empty_slice(odd_weight):
    with pytest.raises(EmptySliceError):
        accepting_fraction(odd_weight, Slice(ParamValue(1, 1), ()))


# -- bound curve ------------------------------------------------------------

def test_bound_curve_poly_one():
    bounds = BoundParams(poly=(1,))
    lower, upper = bound_curve(ParamValue(1, 4), bounds)
    assert lower == Fraction(3, 4) and upper == 1
    lower, upper = bound_curve(ParamValue(-1, 4), bounds)
    assert lower == 0 and upper == Fraction(1, 4)


def test_bound_curve_clamps():
    bounds = BoundParams(poly=(4,))
    lower, upper = bound_curve(ParamValue(1, 1), bounds)  # envelope > 1
    assert lower == 0 and upper == 1
    _, upper = bound_curve(ParamValue(-1, 1), bounds)
    assert upper == 1


def test_lower_bound_strictly_increases_at_square_magnitudes():
    bounds = BoundParams(poly=(1,))
    lowers = [bound_curve(ParamValue(1, n), bounds)[0] for n in (1, 4, 9)]
    assert lowers[0] < lowers[1] < lowers[2]
    assert lowers[1] == Fraction(3, 4)


def test_bound_params_validation():
    with pytest.raises(Exception):
        BoundParams(c=Fraction(3, 2))
    with pytest.raises(Exception):
        BoundParams(poly=())
    with pytest.raises(Exception):
        BoundParams(poly=(-1,))
    with pytest.raises(Exception):
        BoundParams(poly=(0,))


# -- F statistic ------------------------------------------------------------

def test_F_spot_values(identity):
    f_neg = compute_F(identity, 4, -1)
    assert f_neg.value == Fraction(1, 3)
    # Tight against the intermediate bound c^4 / (1 - c^4) with c = 1/sqrt 2.
    c4 = (SQRT_HALF ** 4).as_fraction()
    assert f_neg.value == c4 / (1 - c4)
    assert not f_neg.exceeds_bound
    f_pos = compute_F(identity, 4, 1)
    assert f_pos.value == Fraction(1, 5)
    assert compute_F(identity, 5, 1).value == 0
    assert compute_F(identity, 5, -1).value == 0


def test_F_bound_over_budget(identity):
    for n in range(1, 13):
        for p in (1, -1):
            stat = compute_F(identity, n, p)
            assert not stat.exceeds_bound
            assert Root2Num.of(stat.value) <= stat.bound


@given(st.integers(4, 4096), st.integers(0, 10 ** 6), st.integers(0, 10 ** 6),
       st.sampled_from((1, -1)))
def test_F_strictly_increasing_in_bottom_count(total, bottom_seed, bump_seed, p):
    # Synthetic counts, kept non-degenerate: bottom + bump <= total - 1.
    bottom = bottom_seed % (total - 1)
    bump = 1 + bump_seed % (total - 1 - bottom)
    before = f_from_counts(total, bottom, p)
    after = f_from_counts(total, bottom + bump, p)
    assert after > before


# -- acceptance bounds ------------------------------------------------------

def test_acc_bounds_odd_weight_identity(odd_weight, identity, bounds):
    report = verify_acc_bounds(odd_weight, identity, bounds, 10)
    assert report.passed
    assert len(report.rows) == 20
    by_key = {(r.sign, r.n): r for r in report.rows}
    assert by_key[(1, 4)].fraction == Fraction(8, 10)
    assert by_key[(-1, 4)].fraction == 0


def test_acc_bounds_first_is_two_table(first_is_two, bounds):
    iso = build_table_iso(first_is_two, 10)
    report = verify_acc_bounds(first_is_two, iso, bounds, 10)
    assert report.passed
    assert not report.violations


def test_acc_bounds_poly_one_spot(odd_weight, identity):
    report = verify_acc_bounds(odd_weight, identity, BoundParams(poly=(1,)), 4)
    assert report.passed  # e.g. 2/3 >= 1 - c^2 = 1/2 at n = 2, 8/10 >= 3/4


def test_acc_bounds_negative_control(binary, identity, bounds):
    # even_weight members sit exactly where the discriminator expects
    # non-members, so the measured fractions break the envelope.
    lang = even_weight_language(binary)
    report = verify_acc_bounds(lang, identity, bounds, 10)
    assert not report.passed
    assert report.violations


# -- balance ----------------------------------------------------------------

def test_balance_margins(odd_weight, identity, bounds):
    report = balance_check(odd_weight, identity, bounds, 12)
    rows = {r.n: r for r in report.rows}
    assert rows[4].in_margin == Fraction(1, 2)
    assert rows[4].out_margin == Fraction(1, 4)
    assert rows[4].passed
    assert rows[2].out_margin == 0 and not rows[2].passed
    assert report.failing_n == (2,)
    for n in range(4, 13):
        assert rows[n].in_margin >= Fraction(1, 4)
        assert rows[n].out_margin >= Fraction(1, 4)
    assert report.side_condition_ok


def test_balance_side_condition_flags_growing_poly(odd_weight, identity):
    # Poly(2)/Poly(1) = 13/3 outpaces sqrt 2, so Poly(n) (1/sqrt 2)^n rises.
    report = balance_check(odd_weight, identity,
                           BoundParams(poly=(1, 0, 1, 1)), 3)
    assert not report.side_condition_ok


# -- threshold --------------------------------------------------------------

def test_threshold_odd_weight(odd_weight, identity, bounds):
    scan = build_scan(odd_weight, identity, bounds, 10)
    assert scan.threshold.value == -1.0
    assert scan.threshold.param == ParamValue(-1, 1)
    assert threshold_biconditional_holds(scan.slices, scan.threshold)


def test_threshold_single_low_positive_slice():
    stats = [make_stats(1, 4, 10, 4)]  # accepting fraction 0.4
    result = threshold(stats)
    assert result.value is None
    assert "n=4" in result.diagnostic


def test_threshold_no_lower_side():
    stats = [make_stats(1, n, 4, 4) for n in (1, 2, 3)]
    result = threshold(stats)
    assert result.value is None
    assert "no minimum" in result.diagnostic


def test_threshold_interleaved_sides_rejected():
    stats = [make_stats(-1, 1, 4, 0), make_stats(1, 1, 4, 4),
             make_stats(1, 4, 10, 4)]  # a low slice above high ones
    result = threshold(stats)
    assert result.value is None
    assert "sits above" in result.diagnostic


def test_inverted_scan_has_no_canonical_threshold(odd_weight, identity, bounds):
    scan = build_scan(odd_weight, identity, bounds, 6)
    inv = invert_scan(scan)
    assert threshold(inv.slices, CANONICAL).value is None
    assert inv.threshold.value == -1.0  # adapted, inverted-form threshold


# -- requirements 1 and 2 ---------------------------------------------------

def test_requirement12_odd_weight(odd_weight, identity, bounds):
    scan = build_scan(odd_weight, identity, bounds, 10)
    assert scan.requirement1 and scan.requirement2
    assert not scan.req12.violations


def test_requirement12_negative_control(binary, identity, bounds):
    scan = build_scan(even_weight_language(binary), identity, bounds, 10)
    assert not scan.requirement1
    assert scan.req12.violations


def test_requirement12_inverted_orientation(odd_weight, identity, bounds):
    scan = build_scan(odd_weight, identity, bounds, 10)
    inv = invert_scan(scan)
    assert inv.requirement1 and inv.requirement2
    # The mirrored checks fail if applied with the wrong orientation.
    wrong = requirement12_check(inv.slices, bounds, CANONICAL)
    assert not (wrong.requirement1 and wrong.requirement2)


# -- requirement 3 ----------------------------------------------------------

def test_requirement3_odd_weight(odd_weight, identity, bounds):
    scan = build_scan(odd_weight, identity, bounds, 12)
    assert scan.requirement3
    counts = [w.count for w in scan.req3.pos_windows if w.full]
    assert counts == sorted(counts)
    assert all(r >= 2 for r in scan.req3.pos_ratios)


def test_requirement3_uniform_counts_fail(bounds):
    stats = [make_stats(1, n, 10, 10) for n in range(1, 13)]
    stats += [make_stats(-1, n, 10, 0) for n in range(1, 13)]
    result = requirement3_check(stats, ThresholdResult(-1.0, ParamValue(-1, 1),
                                                       None),
                                1.0, 1.0, Fraction(2))
    assert not result.passed


def test_requirement3_empty_windows_flagged_not_failed(bounds):
    sizes = {2: 4, 3: 8, 6: 48, 8: 96, 10: 400, 12: 800}
    stats = [make_stats(1, n, size, size) for n, size in sizes.items()]
    stats.append(make_stats(-1, 1, 1, 0))
    result = requirement3_check(stats, ThresholdResult(-1.0, ParamValue(-1, 1),
                                                       None),
                                1.0, 1.0, Fraction(2))
    assert result.passed
    assert any("empty full window" in note for note in result.notes)
    assert any(w.empty for w in result.pos_windows)


def test_requirement3_needs_threshold(bounds):
    result = requirement3_check([], ThresholdResult(None, None, "nope"),
                                1.0, 1.0, Fraction(2))
    assert not result.passed


# -- inversion --------------------------------------------------------------

def test_invert_scan_is_involution(odd_weight, identity, bounds):
    scan = build_scan(odd_weight, identity, bounds, 8)
    back = invert_scan(invert_scan(scan))
    assert back == scan


def test_inversion_preserves_fractions_at_negated_values(odd_weight, identity,
                                                         bounds):
    scan = build_scan(odd_weight, identity, bounds, 6)
    inv = invert_scan(scan)
    original = {(s.sign, s.n): s.accepting_fraction for s in scan.slices}
    for s in inv.slices:
        assert s.accepting_fraction == original[(-s.sign, s.n)]


def test_inverted_iff_canonical(odd_weight, binary, identity, bounds):
    good = build_scan(odd_weight, identity, bounds, 10)
    bad = build_scan(even_weight_language(binary), identity, bounds, 10)
    for scan in (good, bad):
        passes_canonical = (scan.requirement1 and scan.requirement2
                            and scan.requirement3)
        inv = invert_scan(scan)
        passes_inverted = (inv.requirement1 and inv.requirement2
                           and inv.requirement3)
        assert passes_canonical == passes_inverted


# -- scan assembly ----------------------------------------------------------

def test_scan_metadata(odd_weight, identity, bounds):
    scan = build_scan(odd_weight, identity, bounds, 6)
    assert scan.skipped_undefined == 1
    assert scan.empty_slices == ()
    assert len(scan.slices) == 12
    assert [s.n for s in scan.slices] == [n for n in range(1, 7) for _ in "ab"]


def test_scan_worker_count_invariance(odd_weight, identity, bounds):
    one = build_scan(odd_weight, identity, bounds, 8, workers=1)
    many = build_scan(odd_weight, identity, bounds, 8, workers=5)
    assert one == many
