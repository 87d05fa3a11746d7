import pytest
import sympy

from p3ext.localorder import l_valuation_of_field_disc

X = sympy.Symbol("X")


def disc(coeffs):
    return int(sympy.discriminant(sympy.Poly(list(reversed(coeffs)), X)))


@pytest.mark.parametrize(
    "coeffs, l, expected",
    [
        ([-1, -2, 1, 1], 7, 2),          # cyclic cubic of conductor 7
        ([-8, -16, 4, 1], 2, 0),         # same field, 2-index 2^3
        ([1, 0, 0, 1, 0, 0, 1], 3, 9),   # Phi_9: d = -3^9
        ([5, 0, 1], 2, 2),               # Q(sqrt(-5)): d = -20
        ([-5, 0, 1], 2, 0),              # Q(sqrt 5): d = 5
        ([-12, 0, 1], 2, 2),             # Q(sqrt 3) = Q(sqrt 12): d = 12
        ([-12, 0, 1], 3, 1),
    ],
)
def test_field_disc_valuations(coeffs, l, expected):
    assert l_valuation_of_field_disc(coeffs, disc(coeffs), l) == expected


def test_real_subfield_of_zeta19():
    # minimal polynomial of zeta_19 + zeta_19^-1, field discriminant 19^8
    from p3ext.cyclo import CycloElement, min_poly_over_Q

    z = CycloElement.zeta(19, 1)
    f = [int(c) for c in min_poly_over_Q(z + z**-1).coeffs]
    assert l_valuation_of_field_disc(f, disc(f), 19) == 8
