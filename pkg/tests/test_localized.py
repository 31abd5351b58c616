"""Localized scalars: gcds, associates, and exact fraction arithmetic."""

import random

import pytest
import sympy

from orbinov import UnsupportedOperationError, ValidationError
from orbinov.laurent import LaurentPoly, WeightSystem, exact_divide
from orbinov.localized import (LocalizedScalar, associates, int_poly_gcd,
                               localized_gcd)

WS1 = WeightSystem([(1,)])
WS0 = WeightSystem([])
WS2 = WeightSystem([(1, 0), (0, 1)])


def T(power=1):
    return LaurentPoly.monomial(1, (power,))


def const(c, r=1):
    return LaurentPoly.const(r, c)


def _sympy_gcd(a, b):
    x = sympy.symbols("x")
    pa = sum(c * x ** i for i, c in enumerate(a))
    pb = sum(c * x ** i for i, c in enumerate(b))
    g = sympy.Poly(sympy.gcd(pa, pb, x), x)
    return [int(c) for c in reversed(g.all_coeffs())]


def test_int_poly_gcd_against_sympy():
    rng = random.Random(404)
    for _ in range(200):
        a = [rng.randint(-6, 6) for _ in range(rng.randint(1, 5))]
        b = [rng.randint(-6, 6) for _ in range(rng.randint(1, 5))]
        if not any(a) and not any(b):
            continue
        assert int_poly_gcd(a, b) == _sympy_gcd(a, b)


def test_int_poly_gcd_shared_factor():
    rng = random.Random(405)
    x = sympy.symbols("x")
    for _ in range(80):
        f = [rng.randint(-4, 4) for _ in range(rng.randint(1, 3))]
        g = [rng.randint(-4, 4) for _ in range(rng.randint(1, 3))]
        h = [rng.randint(-4, 4) for _ in range(rng.randint(1, 3))]
        pf = sum(c * x ** i for i, c in enumerate(f))
        pg = sum(c * x ** i for i, c in enumerate(g))
        ph = sum(c * x ** i for i, c in enumerate(h))
        a = sympy.Poly(pf * ph, x).all_coeffs()
        b = sympy.Poly(pg * ph, x).all_coeffs()
        a = [int(c) for c in reversed(a)] or [0]
        b = [int(c) for c in reversed(b)] or [0]
        if not any(a) and not any(b):
            continue
        assert int_poly_gcd(a, b) == _sympy_gcd(a, b)


def test_int_poly_gcd_edges():
    assert int_poly_gcd([0], [-2, 4]) == [2, -4] or \
        int_poly_gcd([0], [-2, 4]) == [-2, 4]
    # lead is made positive on the zero branch
    assert int_poly_gcd([], [0, -3])[-1] > 0
    with pytest.raises(ValidationError):
        int_poly_gcd([0, 0], [])


def test_localized_gcd_rank_one():
    g = localized_gcd(T() - const(1), T(2) - const(1), WS1)
    assert exact_divide(T(2) - const(1), g) is not None
    assert exact_divide(T() - const(1), g) is not None
    assert g.n_terms() == 2  # an associate of T - 1
    assert localized_gcd(T() * 2 + const(1), const(2), WS1) == const(1)
    assert localized_gcd(const(4), const(6), WS1) == const(2)


def test_localized_gcd_laurent_inputs():
    # gcds ignore monomial shifts: T^-1(T - 1) and T - 1 share T - 1
    f = LaurentPoly(1, {(0,): 1, (-1,): -1})
    g = localized_gcd(f, T() - const(1), WS1)
    assert exact_divide(T() - const(1), g) is not None
    assert g.n_terms() == 2


def test_localized_gcd_zero_and_rank_limits():
    g = localized_gcd(LaurentPoly(1, {}), T(3) * -2, WS1)
    assert g.terms == {(0,): 2}  # shifted to base 0, lead made positive
    with pytest.raises(ValidationError):
        localized_gcd(LaurentPoly(1, {}), LaurentPoly(1, {}), WS1)
    assert localized_gcd(const(4, 0), const(-6, 0), WS0) == const(2, 0)
    with pytest.raises(UnsupportedOperationError):
        localized_gcd(const(2, 2), const(4, 2), WS2)


def test_associates():
    assert not associates(const(2), const(6), WS1)
    assert associates(const(2), T() * 2, WS1)
    # monic polynomials are units, so these all collapse together
    assert associates(T() - const(1),
                      (T() - const(1)) * (T() + const(1)), WS1)
    assert associates(T() - const(1), const(1), WS1)
    assert associates(const(2) * (T() - const(1)), const(2), WS1)
    assert not associates(const(2), T() * 2 + const(1), WS1)
    assert associates((T() - const(1)) * 3, (const(1) - T(-1)) * 3, WS1)
    assert not associates(LaurentPoly(1, {}), const(1), WS1)
    assert associates(LaurentPoly(1, {}), LaurentPoly(1, {}), WS1)
    with pytest.raises(UnsupportedOperationError):
        associates(const(2, 2), const(2, 2), WS2)


def test_scalar_construction():
    one = const(1)
    s = LocalizedScalar(WS1, T(2) - const(1), T() - const(1))
    assert s.num == T() + const(1) and s.den == one
    # denominator with leading coefficient -1 is silently negated
    s2 = LocalizedScalar(WS1, one, const(1) - T())
    assert s2.den == T() - const(1) and s2.num == -one
    with pytest.raises(ValidationError):
        LocalizedScalar(WS1, one, const(2))
    with pytest.raises(ValidationError):
        LocalizedScalar(WS1, one, LaurentPoly(1, {}))
    z = LocalizedScalar(WS1, LaurentPoly(1, {}), T() - const(1))
    assert not z and z.den == one


def test_scalar_arithmetic():
    a = LocalizedScalar(WS1, const(1), T() - const(1))
    b = LocalizedScalar(WS1, const(1), T() + const(1))
    s = a + b
    assert s.num == T() * 2
    assert s.den == (T() - const(1)) * (T() + const(1))
    assert a - a == LocalizedScalar.from_int(WS1, 0)
    p = a * b
    assert p.num == const(1) and p.den == T(2) - const(1)
    assert (a * LocalizedScalar.from_int(WS1, 0)).num == LaurentPoly(1, {})


def test_scalar_eq_cross_multiplication():
    a = LocalizedScalar(WS1, T(2) - const(1), T() - const(1))
    b = LocalizedScalar(WS1, T() + const(1))
    assert a == b
    assert a != LocalizedScalar(WS1, T() - const(1))


def test_scalar_division():
    u = LocalizedScalar(WS1, T() - const(1))
    two = LocalizedScalar.from_int(WS1, 2)
    x = LocalizedScalar(WS1, T(2) - const(1))
    assert (x / u).num == T() + const(1)
    with pytest.raises(ValidationError):
        x / two
    with pytest.raises(ValidationError):
        x / LocalizedScalar.from_int(WS1, 0)
    assert two.exact_divide_scalar(u) is not None
    assert two.exact_divide_scalar(LocalizedScalar.from_int(WS1, 4)) is None
    got = LocalizedScalar.from_int(WS1, 4).exact_divide_scalar(two)
    assert got == LocalizedScalar.from_int(WS1, 2)


def test_scalar_units():
    assert LocalizedScalar(WS1, T() - const(1)).is_unit()
    assert LocalizedScalar(WS1, T() - const(2)).is_unit()
    assert LocalizedScalar(WS1, T(5)).is_unit()
    assert not LocalizedScalar.from_int(WS1, 2).is_unit()
    assert not LocalizedScalar.from_int(WS1, 0).is_unit()
    # unreduced unit: (2T - 2)/(T - 1) is the unit 2 - no wait, 2 is not
    # a unit; the test is that the verdict matches the reduced form
    s = LocalizedScalar(WS1, (T() - const(1)) * 2, T() - const(1))
    assert not s.is_unit()
    s2 = LocalizedScalar(WS1, (T() - const(2)) * (T() + const(1)),
                         T() + const(1))
    assert s2.is_unit()


def test_scalar_rank_two_paths():
    t1 = LaurentPoly.monomial(2, (1, 0))
    t2 = LaurentPoly.monomial(2, (0, 1))
    one2 = const(1, 2)
    a = LocalizedScalar(WS2, t1 - one2)
    b = LocalizedScalar(WS2, t2 - one2)
    prod = a * b
    assert prod.is_unit()
    assert (prod / a) == b
    # monomial-only reduction still fires at rank 2
    s = LocalizedScalar(WS2, (t1 - one2) * t2, t2)
    assert s == a
    two = LocalizedScalar.from_int(WS2, 2)
    with pytest.raises(UnsupportedOperationError):
        a.exact_divide_scalar(two)


def test_scalar_random_field_laws():
    rng = random.Random(99)
    pool = [
        LocalizedScalar(WS1, T() - const(1)),
        LocalizedScalar(WS1, const(3), T() + const(1)),
        LocalizedScalar.from_int(WS1, 2),
        LocalizedScalar(WS1, T(-1) + const(5), T(2) - const(1)),
        LocalizedScalar.from_int(WS1, 0),
    ]
    for _ in range(80):
        a, b, c = (rng.choice(pool) for _ in range(3))
        assert (a + b) * c == a * c + b * c
        assert a + (b + c) == (a + b) + c
        assert a * b == b * a
