"""Morse bound checking: rows, slacks, verdicts, and bad input."""

import pytest

from orbinov import (CriticalData, NovikovNumbers, ValidationError,
                     check_inequalities)


def numbers(betti, torsion, route="rank-one"):
    rank = 0 if route == "integral" else 1
    return NovikovNumbers(betti, torsion, rank, route)


def test_critical_data_validation():
    CriticalData([0, 3, 1])
    with pytest.raises(ValidationError):
        CriticalData([1, -2])
    with pytest.raises(ValidationError):
        CriticalData([1, "2"])
    with pytest.raises(ValidationError):
        # bool is an int subclass but not a count
        CriticalData([True])


def test_padding_and_overlong_counts():
    cd = CriticalData([1, 2])
    assert cd.padded(3) == [1, 2, 0, 0]
    # trailing zeros past the top degree are harmless
    assert CriticalData([1, 2, 0, 0]).padded(1) == [1, 2]
    with pytest.raises(ValidationError):
        CriticalData([1, 2, 5]).padded(1)


def test_exact_fit_has_zero_slack():
    # counts equal to the homology of the pillowcase orbit space
    nums = numbers([1, 0, 1], [0, 0, 0])
    report = check_inequalities(nums, CriticalData([1, 0, 1]))
    assert report.mode == "full"
    assert report.holds
    assert report.violations() == []
    assert all(row.slack == 0 for row in report.rows)
    degrees = [(row.family, row.degree) for row in report.rows]
    assert degrees == [("plain", 0), ("plain", 1), ("plain", 2),
                       ("alternating", 0), ("alternating", 1),
                       ("alternating", 2)]


def test_zero_numbers_hold_with_zero_counts():
    nums = numbers([0, 0], [0, 0])
    report = check_inequalities(nums, CriticalData([]))
    assert report.holds
    assert all(row.slack == 0 for row in report.rows)


def test_torsion_enters_both_families():
    # q_1 = 1 forces c_1 >= b_1 + 1 and c_2 >= q_1 + b_2 rows to move
    nums = numbers([1, 1, 0], [0, 1, 0])
    short = check_inequalities(nums, CriticalData([1, 1, 1]))
    plain = [r for r in short.rows if r.family == "plain"]
    assert [r.rhs for r in plain] == [1, 2, 1]
    assert not plain[1].ok
    assert plain[1].slack == -1
    enough = check_inequalities(nums, CriticalData([1, 2, 1]))
    assert enough.holds


def test_alternating_family_is_sharper():
    # plain bounds hold but the degree one partial sum fails
    nums = numbers([1, 2, 1], [0, 0, 0])
    report = check_inequalities(nums, CriticalData([2, 2, 3]))
    plain = [r for r in report.rows if r.family == "plain"]
    assert all(r.ok for r in plain)
    alt = [r for r in report.rows if r.family == "alternating"]
    # c_1 - c_0 = 0 < b_1 - b_0 = 1
    assert alt[1].lhs == 0 and alt[1].rhs == 1
    assert not report.holds
    assert report.violations() == [alt[1]]


def test_betti_only_mode_drops_torsion():
    nums = NovikovNumbers([0, 1, 0], None, 2, "betti-only")
    report = check_inequalities(nums, CriticalData([0, 1, 0]))
    assert report.mode == "betti-only"
    assert report.holds


def test_violation_is_reported_not_raised():
    nums = numbers([1, 0, 1], [0, 0, 0])
    report = check_inequalities(nums, CriticalData([0, 0, 0]))
    assert not report.holds
    bad = report.violations()
    assert bad and all(row.slack < 0 for row in bad)
    assert "VIOLATED" in repr(bad[0])


def test_provenance_is_carried():
    cd = CriticalData([1, 0, 1], provenance="round function")
    assert cd.provenance == "round function"
