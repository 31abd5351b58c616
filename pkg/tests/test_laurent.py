"""Laurent polynomial arithmetic, weight systems, exact division."""

import random
from fractions import Fraction

import pytest

from orbinov import ValidationError
from orbinov.laurent import LaurentPoly, WeightSystem, divides, exact_divide


def T(r=1, coord=0, power=1):
    exp = [0] * r
    exp[coord] = power
    return LaurentPoly.monomial(r, tuple(exp))


def const(c, r=1):
    return LaurentPoly.const(r, c)


def test_term_cleanup_and_eq():
    p = LaurentPoly(1, {(1,): 2, (0,): 0, (2,): -1})
    assert p.terms == {(1,): 2, (2,): -1}
    q = LaurentPoly(1, [((1,), 1), ((1,), 1), ((2,), -1)])
    assert p == q
    assert hash(p) == hash(q)
    assert not LaurentPoly.const(3, 0)


def test_arithmetic():
    t = T()
    p = t * t - const(1)
    assert p == LaurentPoly(1, {(2,): 1, (0,): -1})
    assert p * const(0) == LaurentPoly(1, {})
    assert (t - const(1)) * (t + const(1)) == p
    assert p - p == LaurentPoly(1, {})
    assert -p == const(1) - t * t
    assert p * 3 == p + p + p


def test_negative_exponents_and_shift():
    tinv = LaurentPoly.monomial(1, (-1,))
    assert tinv * T() == const(1)
    p = T() + const(1)
    assert p.shift((-1,)) == const(1) + tinv
    lows, highs = p.shift((-1,)).exp_bounds()
    assert tuple(lows) == (-1,) and tuple(highs) == (0,)


def test_content():
    assert (const(4) + T() * 6).content() == 2
    assert const(-3).content() == 3


def test_weight_system_validation():
    WeightSystem([(1,)])
    WeightSystem([(Fraction(1, 3), 0), (0, 1)])
    with pytest.raises(ValidationError):
        WeightSystem([(1, 0), (2, 0)])
    with pytest.raises(ValidationError):
        WeightSystem([(1,), (0, 1)])
    ws0 = WeightSystem([])
    assert ws0.r == 0 and ws0.k == 1


def test_leading_and_units():
    ws = WeightSystem([(1,)])
    p = T() - const(1)
    assert ws.leading(p) == ((1,), 1)
    assert ws.is_unit_poly(p)
    assert ws.is_unit_poly(T() + const(1))
    assert ws.is_unit_poly(T() - const(2))
    assert not ws.is_unit_poly(T() * 2 - const(1))
    assert not ws.is_unit_poly(const(2))
    assert not ws.is_unit_poly(LaurentPoly(1, {}))
    assert ws.in_mult_set(p)
    assert not ws.in_mult_set(-p)
    # a negative weight flips which end is leading
    wsn = WeightSystem([(-1,)])
    assert wsn.leading(p) == ((0,), -1)
    assert not wsn.in_mult_set(p)
    assert wsn.in_mult_set(-p)


def test_leading_rank_two():
    ws = WeightSystem([(1, 0), (0, 1)])
    p = LaurentPoly(2, {(1, 0): 3, (0, 1): -1})
    # lex on weight vectors: (1,0) beats (0,1)
    assert ws.leading(p) == ((1, 0), 3)
    assert not ws.is_unit_poly(p)
    q = LaurentPoly(2, {(1, 0): 1, (0, 1): -2})
    assert ws.leading(q) == ((1, 0), 1)
    assert ws.is_unit_poly(q) and ws.in_mult_set(q)


def test_leading_weight_order_is_lex():
    ws = WeightSystem([(1, 1), (1, -1)])
    # weight of (1,1) is (2,0); weight of (2,0) is (2,2); lex picks (2,2)
    p = LaurentPoly(2, {(1, 1): 1, (2, 0): 1})
    assert ws.leading(p)[0] == (2, 0)
    q = LaurentPoly(2, {(1, 0): 1, (0, 1): 1})
    # weights (1,1) and (1,-1): first slots tie, second decides
    assert ws.leading(q)[0] == (1, 0)


def test_exact_divide_basics():
    t = T()
    assert exact_divide(t * t - const(1), t - const(1)) == t + const(1)
    assert exact_divide(t * t - const(1), t + const(1)) == t - const(1)
    assert exact_divide(t, t + const(1)) is None
    assert exact_divide(const(6), const(3)) == const(2)
    assert exact_divide(const(3), const(6)) is None
    assert exact_divide(LaurentPoly(1, {}), t) == LaurentPoly(1, {})
    with pytest.raises(ValidationError):
        exact_divide(t, LaurentPoly(1, {}))
    assert divides(t - const(1), t * t - const(1))
    assert not divides(const(2), t + const(1))


def test_exact_divide_laurent_shift():
    tinv = LaurentPoly.monomial(1, (-1,))
    f = const(1) - tinv
    g = T() - const(1)
    q = exact_divide(f, g)
    assert q == tinv and q * g == f


def _random_poly(rng, r, max_terms=4, span=3, coeff=5):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exp = tuple(rng.randint(-span, span) for _ in range(r))
        terms[exp] = rng.randint(-coeff, coeff)
    p = LaurentPoly(r, terms)
    return p if p else const(1, r)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_exact_divide_recovers_factor(r):
    rng = random.Random(1000 + r)
    for _ in range(120):
        f = _random_poly(rng, r)
        g = _random_poly(rng, r)
        h = f * g
        q = exact_divide(h, g)
        assert q is not None
        assert q * g == h
        # quotient is unique in a domain, so it must be f itself
        assert q == f


@pytest.mark.parametrize("r", [1, 2])
def test_exact_divide_rejects_nonmultiples(r):
    rng = random.Random(77 + r)
    for _ in range(150):
        f = _random_poly(rng, r)
        g = _random_poly(rng, r)
        q = exact_divide(f, g)
        if q is not None:
            assert q * g == f
