from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from p3ext.poly import RationalPoly
from p3ext.ramify import Status, dedekind_maximal, monic_integral_model, poly_disc, prime_status, ram_set

X = sympy.Symbol("X")


@given(st.lists(st.integers(-30, 30), min_size=1, max_size=6))
def test_disc_matches_sympy(coeffs):
    f = RationalPoly(coeffs + [1])
    want = sympy.discriminant(sympy.Poly(list(reversed(coeffs + [1])), X))
    if want == 0:
        with pytest.raises(ValueError):
            poly_disc(f)
    else:
        assert poly_disc(f) == want


@given(st.lists(st.fractions(-9, 9, max_denominator=6), min_size=2, max_size=6).filter(lambda c: c[-1] != 0))
def test_monic_model_generates_same_field(coeffs):
    f = RationalPoly(coeffs).monic()
    g, c = monic_integral_model(f)
    assert g.is_monic() and g.is_integral()
    # g(X) = c^n f(X / c)
    assert g == f.compose(RationalPoly([0, Fraction(1, c)])) * Fraction(c) ** f.degree


@pytest.mark.parametrize(
    "coeffs, expected",
    [([-2, 0, 1], [2]), ([-1, -3, 0, 1], [3]), ([1, 1, 1], [3]), ([-1, -2, 1, 1], [7]), ([-5, 0, 1], [5])],
)
def test_small_fields(coeffs, expected):
    rep = ram_set(RationalPoly(coeffs))
    assert rep.final_set == expected


def test_dedekind_classical_examples():
    assert dedekind_maximal([-2, 0, 1], 2)
    assert not dedekind_maximal([-5, 0, 1], 2)    # Z[sqrt 5] has index 2
    status, _ = prime_status(RationalPoly([-5, 0, 1]), 2)
    assert status is Status.UNRAMIFIED
