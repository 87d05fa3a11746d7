import pytest

from p3ext.cyclo import CycloElement, min_poly_over_Q
from p3ext.tower import TowerError, build_tower, gaussian_period, primitive_root


@pytest.mark.parametrize("p, r", [(3, 7), (3, 13), (3, 19), (5, 11), (5, 31), (7, 29)])
def test_tower_degrees_and_generators(p, r):
    t = build_tower(p, r=r)
    assert (t.degree("F"), t.degree("K"), t.degree("L")) == (p, p - 1, p * (p - 1))
    assert t.contains("F", t.delta) and not t.contains("F", t.zeta_p)
    assert t.contains("K", t.zeta_p)
    # sigma_bar generates Gal(L/K): it fixes zeta_p and moves delta
    assert t.sigma_bar(t.zeta_p) == t.zeta_p and t.sigma_bar(t.delta) != t.delta
    assert t.tau_bar(t.delta) == t.delta and t.tau_bar(t.zeta_p) == t.zeta_p ** (t.e % p)


def test_delta_is_a_period():
    t = build_tower(3, r=7)
    z7 = CycloElement.zeta(21, 3)
    assert t.delta == z7 + z7**-1
    f = min_poly_over_Q(t.delta)
    assert [int(c) for c in f.coeffs] == [-1, -2, 1, 1]


def test_zeta9_tower():
    t = build_tower(3, zeta_p2=True, e=2)
    assert t.m == 9 and t.degree("L") == 6 and t.is_zeta_p2


def test_signed_e_is_kept():
    assert build_tower(3, r=7, e=-1).e == -1
    assert build_tower(3, r=7).e == primitive_root(3) == 2


def test_bad_inputs():
    with pytest.raises(TowerError):
        build_tower(3, r=11)
    with pytest.raises(TowerError):
        build_tower(4, r=13)
    with pytest.raises(TowerError):
        gaussian_period(3, 7, 2)
    with pytest.raises(TowerError):
        build_tower(3, r=7, zeta_p2=True)
