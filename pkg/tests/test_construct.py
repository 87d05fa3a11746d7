import json

import pytest

from p3ext.arith import Group, MapContext
from p3ext.construct import ConstructionError, ConstructionResult, build_construction, kappa_order_check
from p3ext.cyclo import CycloElement
from p3ext.expr import element_from_text
from p3ext.tower import build_tower

from conftest import tower


def test_ex51_alpha_is_t_plus_inverse():
    t = build_tower(3, r=19, sigma=6, e=-1)
    res = build_construction(t, element_from_text("d + z + 1", t), "heisenberg")
    assert [n for _, n in res.alpha_terms] == [1, 2]
    assert res.kappa_coeff == CycloElement.one(t.m)
    assert res.provenance == "verified"
    assert kappa_order_check(res)


@pytest.mark.parametrize("name", ["3,7", "3,19", "zeta9,e=2", "5,11"])
def test_kappa_has_order_p_minus_1(name):
    t = tower(name)
    x = element_from_text("d + z" if not t.is_zeta_p2 else "z9 + 2", t)
    res = build_construction(t, x, "heisenberg", force=True)
    assert kappa_order_check(res)
    assert t.contains("L", res.omega)


def test_omega_sigma_relation_on_result():
    t = tower("3,7")
    maps = MapContext(t)
    res = build_construction(maps, element_from_text("d + z", t), "semidirect")
    assert t.sigma_bar(res.omega) * maps.phi(res.x) ** 3 == res.omega * res.b


def test_refuses_uncertified_x():
    t = tower("zeta9,e=2")
    with pytest.raises(ConstructionError):
        build_construction(t, CycloElement.one(t.m), "heisenberg")
    res = build_construction(t, CycloElement.one(t.m), "heisenberg", force=True)
    assert res.provenance.startswith("forced")


def test_rejects_bad_theta():
    t = tower("3,7")
    with pytest.raises(ConstructionError):
        build_construction(t, element_from_text("d + z", t), "semidirect", theta=t.delta)


def test_json_round_trip():
    t = tower("3,7")
    res = build_construction(t, element_from_text("d + z", t), Group.SEMIDIRECT)
    data = json.loads(json.dumps(res.to_json()))
    back = ConstructionResult.from_json(data)
    assert back.omega == res.omega and back.theta == res.theta
    assert back.alpha_terms == res.alpha_terms
    assert back.tower.summary() == res.tower.summary()
