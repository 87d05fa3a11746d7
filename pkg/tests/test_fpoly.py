import sympy
from hypothesis import given, strategies as st

from p3ext import fpoly

X = sympy.Symbol("X")
PRIMES = [2, 3, 5, 7, 13]


def sympy_pattern(coeffs, l):
    f = sympy.Poly(list(reversed(coeffs)), X, modulus=l)
    _, facs = f.factor_list()
    return tuple(sorted(g.degree() for g, k in facs for _ in range(k)))


@st.composite
def monic_mod_l(draw):
    l = draw(st.sampled_from(PRIMES))
    n = draw(st.integers(1, 9))
    coeffs = draw(st.lists(st.integers(0, l - 1), min_size=n, max_size=n)) + [1]
    return coeffs, l


@given(monic_mod_l())
def test_squarefree_matches_sympy(case):
    coeffs, l = case
    # Poly.is_sqf misreports X^2 mod 2, so read multiplicities off the factorization
    _, facs = sympy.Poly(list(reversed(coeffs)), X, modulus=l).factor_list()
    assert fpoly.is_squarefree(coeffs, l) == all(k == 1 for _, k in facs)


@given(monic_mod_l())
def test_pattern_matches_sympy_on_squarefree(case):
    coeffs, l = case
    if fpoly.is_squarefree(coeffs, l):
        assert fpoly.distinct_degree_pattern(coeffs, l) == sympy_pattern(coeffs, l)


@given(monic_mod_l())
def test_squarefree_parts_reassemble(case):
    coeffs, l = case
    prod = [1]
    for g, k in fpoly.squarefree_parts(coeffs, l):
        for _ in range(k):
            prod = fpoly.mul(prod, g, l)
    assert fpoly.trim(prod) == fpoly.trim(fpoly.reduce_mod(coeffs, l))


@given(monic_mod_l(), monic_mod_l())
def test_divmod(a, b):
    (fa, l), (fb, _) = a, b
    fb = fpoly.reduce_mod(fb, l)
    q, r = fpoly.divmod_poly(fa, fb, l)
    assert fpoly.trim(fpoly.sub(fa, fpoly.mul(q, fb, l), l)) == fpoly.trim(r)


def test_radical_in_characteristic_p():
    # X^3 - 1 = (X - 1)^3 over F_3
    assert fpoly.radical([2, 0, 0, 1], 3) == [2, 1]
