from hypothesis import given, strategies as st

from p3ext.arith import Group, MapContext
from p3ext.cyclo import CycloElement
from p3ext.expr import element_from_text

from conftest import elements_of_L, tower, tower_and_element

GAUSS3 = ["3,7", "3,13", "3,19", "3,7,e=-1", "zeta9,e=2"]


@given(st.data())
def test_phi_is_multiplicative(data):
    t, x = data.draw(tower_and_element(GAUSS3))
    y = data.draw(elements_of_L(t))
    maps = MapContext(t)
    assert maps.phi(x * y) == maps.phi(x) * maps.phi(y)


@given(tower_and_element(GAUSS3))
def test_norm_commutes_with_phi(tx):
    t, x = tx
    maps = MapContext(t)
    assert maps.norm_L_over_K(maps.phi(x)) == maps.phi(maps.norm_L_over_K(x))


@given(tower_and_element(GAUSS3))
def test_tau_twists_phi_by_e(tx):
    t, x = tx
    maps = MapContext(t)
    f = maps.phi(x)
    p, e = t.p, t.e
    assert t.tau_bar(f) == f**e * x ** (1 - e ** (p - 1))


@given(tower_and_element(GAUSS3), st.sampled_from(list(Group)))
def test_sigma_omega_relation(tx, variant):
    """sigma_bar(omega) * Phi(x)^p = omega * b for both variants."""
    t, x = tx
    maps = MapContext(t)
    base = maps.beta(x)
    if variant is Group.SEMIDIRECT:
        base = base * maps.lagrange_resolvent()
    omega = maps.phi(base)
    b = maps.b_value(x, variant)
    assert t.contains("K", b)
    assert t.sigma_bar(omega) * maps.phi(x) ** t.p == omega * b


def test_phi_p5_small_cases():
    t = tower("5,11")
    maps = MapContext(t)
    x = element_from_text("d - z", t)
    y = element_from_text("d^2 + 1", t)
    assert maps.phi(x * y) == maps.phi(x) * maps.phi(y)
    assert maps.norm_L_over_K(maps.phi(x)) == maps.phi(maps.norm_L_over_K(x))


def test_kappa_exponent_is_exact():
    for name, k in [("3,7", (1 - 2**2) // 3), ("3,7,e=-1", 0), ("5,11", (1 - 2**4) // 5)]:
        assert MapContext(tower(name)).kappa_exponent == k


def test_norms_of_known_elements():
    t = tower("3,7")
    maps = MapContext(t)
    x = element_from_text("d + z", t)
    assert maps.norm_L_over_K(x) == element_from_text("3 - z", t)
    assert maps.norm_L_over_Q(x) == 13


def test_lagrange_resolvent_eigenvector():
    for name in ("3,7", "3,19", "zeta9,e=2"):
        t = tower(name)
        theta = MapContext(t).lagrange_resolvent()
        assert theta and t.sigma_bar(theta) == t.zeta_p * theta


def test_classify_examples():
    t = tower("3,7")
    cls = MapContext(t).classify(element_from_text("d + z", t))
    assert cls.induces_heisenberg and cls.induces_semidirect
    # x = 1: b_H = 1 is a cube, b_S = Phi(zeta_3) is not one in a Gaussian tower
    one = MapContext(t).classify(CycloElement.one(t.m))
    assert (one.induces_heisenberg, one.induces_semidirect) == (False, True)
    t9 = tower("zeta9,e=2")
    one9 = MapContext(t9).classify(CycloElement.one(t9.m))
    assert (one9.induces_heisenberg, one9.induces_semidirect) == (False, False)


def test_group_parse_aliases():
    assert Group.parse("h") is Group.HEISENBERG
    assert Group.parse("Semidirect") is Group.SEMIDIRECT
