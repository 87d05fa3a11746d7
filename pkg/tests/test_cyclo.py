from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from p3ext.cyclo import (
    Automorphism,
    ConductorMismatch,
    CycloElement,
    coerce,
    cyclotomic_poly,
    min_poly_over_Q,
    orbit_product,
)
from p3ext.ntheory import units_mod

M = 21


def elements(m=M):
    return st.lists(st.integers(-4, 4), min_size=1, max_size=m).map(lambda c: CycloElement(m, c))


nonzero = elements().filter(lambda a: not a.is_zero())


@given(elements(), elements(), elements())
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)


@given(nonzero)
def test_inverse(a):
    assert a * a.inverse() == CycloElement.one(M)


@given(elements(), elements(), st.sampled_from(units_mod(M)))
def test_automorphisms_are_ring_maps(a, b, k):
    s = Automorphism(M, k)
    assert s(a * b) == s(a) * s(b)
    assert s(a + b) == s(a) + s(b)


@given(nonzero)
def test_full_norm_is_rational_and_matches_resultant(a):
    n = orbit_product(a, [Automorphism(M, k) for k in units_mod(M)])
    assert n.is_rational()
    X = sympy.Symbol("X")
    phi = sympy.Poly(list(reversed(cyclotomic_poly(M))), X)
    lift = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(a.coeffs)], X)
    assert sympy.resultant(phi, lift) == sympy.Rational(n.rational_value().numerator, n.rational_value().denominator)


@pytest.mark.parametrize("n", [1, 2, 3, 9, 12, 21, 57, 105])
def test_cyclotomic_poly(n):
    X = sympy.Symbol("X")
    assert list(reversed(cyclotomic_poly(n))) == sympy.Poly(sympy.cyclotomic_poly(n, X), X).all_coeffs()


def test_pow_and_negative_pow():
    z = CycloElement.zeta(M, 1)
    assert z**21 == CycloElement.one(M)
    assert z**-1 == z**20
    assert (z + 2) ** -2 * (z + 2) ** 2 == 1


def test_coerce_and_min_poly():
    z3 = CycloElement.zeta(3, 1)
    up = coerce(z3, 21)
    assert up == CycloElement.zeta(21, 7)
    assert coerce(up, 3) == z3
    f = min_poly_over_Q(up + 1)
    assert f.coeffs == (Fraction(1), Fraction(-1), Fraction(1))
    with pytest.raises(ConductorMismatch):
        z3 + CycloElement.zeta(5, 1)
