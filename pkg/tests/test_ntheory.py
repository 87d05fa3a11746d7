from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from p3ext.ntheory import (
    FactorizationError,
    crt,
    euler_phi,
    factor_integer,
    factor_rational,
    multiplicative_order,
    primitive_root,
    units_mod,
    valuation,
)


@given(st.integers(2, 10**12))
def test_factor_integer_matches_sympy(n):
    fac = factor_integer(n)
    assert fac == sympy.factorint(n)
    assert all(type(q) is int for q in fac)


@given(st.integers(-10**9, 10**9).filter(bool), st.integers(1, 10**6))
def test_factor_rational_reconstructs(a, b):
    sign, fac = factor_rational(Fraction(a, b))
    x = Fraction(sign)
    for q, k in fac.items():
        x *= Fraction(q) ** k
    assert x == Fraction(a, b)


def test_factor_refuses_huge_cofactor():
    big = sympy.nextprime(10**40) * sympy.nextprime(10**41)
    with pytest.raises(FactorizationError):
        factor_integer(int(big), max_digits=30)


@given(st.integers(2, 2000))
def test_euler_phi_and_units(n):
    assert euler_phi(n) == sympy.totient(n) == len(units_mod(n))


@given(st.sampled_from(list(sympy.primerange(3, 500))))
def test_primitive_root_is_smallest(p):
    g = primitive_root(p)
    assert g == sympy.primitive_root(p)
    assert multiplicative_order(g, p) == p - 1


def test_crt_and_valuation():
    assert crt([2, 3], [3, 7]) == 17
    assert valuation(3**5 * 7, 3) == 5
    assert valuation(-(2**4), 2) == 4
