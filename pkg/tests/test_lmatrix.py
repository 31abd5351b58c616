"""Rank and invariant factors of matrices over the weighted ring."""

import random
from fractions import Fraction

import pytest

from orbinov import UnsupportedOperationError, smith_normal_form
from orbinov.laurent import LaurentPoly, WeightSystem
from orbinov.lmatrix import (WeightedLaurentMatrix, fraction_field_rank,
                             invariant_factors)
from orbinov.localized import associates

from oracles import gauss_rank

WS0 = WeightSystem([])
WS1 = WeightSystem([(1,)])
WS2 = WeightSystem([(1, 0), (0, 1)])


def T(power=1):
    return LaurentPoly.monomial(1, (power,))


def const(c, r=1):
    return LaurentPoly.const(r, c)


def mat(ws, rows):
    entries = {}
    for i, row in enumerate(rows):
        for j, p in enumerate(row):
            entries[(i, j)] = p
    return WeightedLaurentMatrix(ws, len(rows), len(rows[0]) if rows else 0,
                                 entries)


def int_mat(rows):
    return mat(WS0, [[const(c, 0) for c in row] for row in rows])


def _eval_rank(M, t):
    """Rank after substituting a rational value for the variable."""
    rows = []
    for i in range(M.nrows):
        row = []
        for j in range(M.ncols):
            p = M.entry(i, j)
            row.append(sum(Fraction(c) * t ** e[0]
                           for e, c in p.terms.items()))
        rows.append(row)
    return gauss_rank(rows)


def test_matrix_container():
    M = mat(WS1, [[T() - const(1), const(0)], [const(2), T()]])
    assert M.entry(0, 1) == LaurentPoly(1, {})
    assert len(M.entries) == 3
    assert M.transpose().entry(0, 1) == const(2)
    Mi = WeightedLaurentMatrix(WS0, 1, 1, {(0, 0): 5})
    assert Mi.entry(0, 0) == const(5, 0)


def test_rank_examples():
    assert fraction_field_rank(mat(WS1, [[T() - const(1), const(0)],
                                         [const(0), const(2)]])) == 2
    # second row is (T - 1) times the first, so rank drops
    dep = mat(WS1, [[const(1), T()],
                    [T() - const(1), T(2) - T()]])
    assert fraction_field_rank(dep) == 1
    assert fraction_field_rank(mat(WS1, [[LaurentPoly(1, {})]])) == 0
    assert fraction_field_rank(WeightedLaurentMatrix(WS1, 0, 3, {})) == 0


def test_rank_rank_two_weights():
    t1 = LaurentPoly.monomial(2, (1, 0))
    t2 = LaurentPoly.monomial(2, (0, 1))
    one = const(1, 2)
    M = mat(WS2, [[t1 - one, t2 - one], [t2 - one, t1 - one]])
    assert fraction_field_rank(M) == 2
    N = mat(WS2, [[t1, t2], [t1, t2]])
    assert fraction_field_rank(N) == 1


def test_rank_random_against_evaluation():
    rng = random.Random(52)
    for _ in range(60):
        m = rng.randint(1, 4)
        n = rng.randint(1, 4)
        rows = []
        for _ in range(m):
            row = []
            for _ in range(n):
                terms = {(rng.randint(-2, 2),): rng.randint(-3, 3)
                         for _ in range(rng.randint(0, 2))}
                row.append(LaurentPoly(1, terms))
            rows.append(row)
        M = mat(WS1, rows)
        got = fraction_field_rank(M)
        # evaluation can only lose rank, and generic points lose none
        samples = [_eval_rank(M, Fraction(p, q))
                   for p, q in [(7, 3), (-11, 5), (13, 2)]]
        assert got == max(samples)
        assert all(s <= got for s in samples)


def test_invariant_factors_unit_and_torsion():
    M = mat(WS1, [[T() - const(1), const(0)], [const(0), const(2)]])
    inv = invariant_factors(M)
    assert inv.rank == 2
    assert inv.nonunit_count == 1
    assert inv.factors[0] == const(1)
    assert associates(inv.factors[1], const(2), WS1)
    assert inv.nonunit_factors() == [const(2)]


def test_invariant_factors_all_units():
    M = mat(WS1, [[T() - const(1), const(2)],
                  [const(0), T() - const(1)]])
    inv = invariant_factors(M)
    assert inv.rank == 2 and inv.nonunit_count == 0


def test_invariant_factors_zero_and_empty():
    Z = mat(WS1, [[LaurentPoly(1, {}), LaurentPoly(1, {})]])
    inv = invariant_factors(Z)
    assert inv.rank == 0 and inv.factors == []
    E = WeightedLaurentMatrix(WS1, 0, 2, {})
    assert invariant_factors(E).rank == 0


def test_invariant_factors_no_units_anywhere():
    # entries 2 and 2T: no unit leading coefficients, stage one idles
    inv = invariant_factors(mat(WS1, [[const(2), T() * 2],
                                      [T() * 2, const(2)]]))
    assert inv.rank == 2
    assert inv.nonunit_count == 2
    assert associates(inv.factors[0], const(2), WS1)
    assert associates(inv.factors[1], (T(2) - const(1)) * 2, WS1)


def test_invariant_factors_denominator_clearing():
    M = mat(WS1, [[T() - const(1), const(2), const(0)],
                  [const(4), const(2), const(0)],
                  [const(0), const(0), const(2)]])
    inv = invariant_factors(M)
    assert inv.rank == 3
    assert inv.nonunit_count == 2
    assert inv.factors[0] == const(1)
    assert associates(inv.factors[1], const(2), WS1)
    assert associates(inv.factors[2], (T() - const(5)) * 2, WS1)


def test_invariant_factors_mixed_units_from_division():
    # elimination by the unit pivot T - 1 creates honest fractions and
    # the residual entry (T*T - 7)/(T - 1) is again a unit
    M = mat(WS1, [[T() - const(1), const(2)], [const(3), T() + const(1)]])
    inv = invariant_factors(M)
    assert inv.rank == 2 and inv.nonunit_count == 0


def test_invariant_factors_match_snf_rank_zero():
    rng = random.Random(9090)
    for _ in range(80):
        m = rng.randint(1, 5)
        n = rng.randint(1, 5)
        rows = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(m)]
        inv = invariant_factors(int_mat(rows))
        snf = smith_normal_form(rows)
        expected = [d for d in snf.diagonal if d != 0]
        assert inv.rank == len(expected)
        got = [abs(p.terms.get((), 0)) for p in inv.factors]
        assert got == expected
        assert inv.nonunit_count == sum(1 for d in expected if d > 1)


def test_invariant_factors_rank_two_weights():
    t1 = LaurentPoly.monomial(2, (1, 0))
    t2 = LaurentPoly.monomial(2, (0, 1))
    one = const(1, 2)
    M = mat(WS2, [[t1 - one, const(0, 2)], [const(0, 2), t2 - one]])
    inv = invariant_factors(M)
    assert inv.rank == 2 and inv.nonunit_count == 0
    with pytest.raises(UnsupportedOperationError):
        invariant_factors(mat(WS2, [[const(2, 2)]]))


def test_minor_cap_refusal():
    rows = [[const(2, 0) if i == j else const(0, 0) for j in range(9)]
            for i in range(9)]
    with pytest.raises(UnsupportedOperationError):
        invariant_factors(mat(WS0, rows))
    inv = invariant_factors(mat(WS0, rows), minor_cap=9)
    assert inv.rank == 9 and inv.nonunit_count == 9
