"""Pull-in transform, crossing constant, and zero-pool balance."""

import math

import pytest

from phasebench import (ConfigError, ParamValue, PULL_IN, ReassignmentTable,
                        build_table_iso, crossing_magnitude,
                        generate_reassignment, sharpen_parameter,
                        verify_zero_balance, words_upto)


def test_arithmetic_branch():
    assert sharpen_parameter(ParamValue(1, 49)) == 1.0      # tau +7 -> +1
    assert sharpen_parameter(ParamValue(-1, 49)) == -1.0
    assert sharpen_parameter(ParamValue(1, 36)) == 0.0      # tau exactly 6
    assert sharpen_parameter(ParamValue(-1, 64)) == -2.0
    assert math.isclose(sharpen_parameter(ParamValue(1, 50)),
                        math.sqrt(50) - PULL_IN)


def test_crossing_magnitude_value():
    assert abs(crossing_magnitude() - 5.6147) < 1e-4
    # The pull-in distance is the next integer above the crossing point.
    assert PULL_IN == math.ceil(crossing_magnitude())


def test_small_magnitudes_need_table(odd_weight, identity):
    with pytest.raises(ConfigError):
        sharpen_parameter(ParamValue(1, 4))
    table = generate_reassignment(odd_weight, identity, 6)
    value = sharpen_parameter(ParamValue(-1, 4), table, (1, 2, 2, 1))
    assert value == -2.0  # non-member keeps magnitude, sign follows truth


def test_missing_entry_is_config_error(odd_weight, identity):
    table = generate_reassignment(odd_weight, identity, 2)
    with pytest.raises(ConfigError):
        sharpen_parameter(ParamValue(1, 3), table, (1, 1, 2))


def test_generated_table_covers_small_slices(odd_weight, identity):
    budget = 6
    table = generate_reassignment(odd_weight, identity, budget)
    covered = set(table.assignments)
    expected = {w for w in words_upto(odd_weight.alphabet, budget)
                if 1 <= len(w) <= budget}
    assert covered == expected


def test_generated_table_zero_pool_balanced(odd_weight, identity,
                                            first_is_two):
    table = generate_reassignment(odd_weight, identity, 6)
    report = verify_zero_balance(odd_weight, table)
    assert report.passed
    assert report.members == report.non_members == 1
    iso = build_table_iso(first_is_two, 6)
    table2 = generate_reassignment(first_is_two, iso, 6)
    report2 = verify_zero_balance(first_is_two, table2)
    assert report2.passed


def test_explicit_half_and_half_table(odd_weight):
    # Two members and two non-members sent to zero satisfy the constraint.
    table = ReassignmentTable({(1,): 0.0, (1, 1, 1): 0.0,
                               (2,): 0.0, (1, 1): 0.0})
    report = verify_zero_balance(odd_weight, table)
    assert report.passed
    assert report.pool_size == 4 and report.members == 2


def test_unbalanced_zero_pool_reported(odd_weight):
    table = ReassignmentTable({(1,): 0.0, (1, 2): 0.0, (2,): 0.0})
    report = verify_zero_balance(odd_weight, table)
    assert not report.passed
    assert (report.members, report.non_members) == (2, 1)


def test_signs_follow_membership(odd_weight, identity):
    table = generate_reassignment(odd_weight, identity, 5)
    for word, value in table.assignments.items():
        if value == 0.0:
            continue
        assert (value > 0) == odd_weight.decide(word)
        assert math.isclose(abs(value), math.sqrt(len(word)))
