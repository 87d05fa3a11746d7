from fractions import Fraction

import pytest

from p3ext.arith import Group
from p3ext.groups import coset_cycle_types, cycle_type_distribution, element_orders, group_elements


@pytest.mark.parametrize("p", [3, 5])
def test_orders_distinguish_the_groups(p):
    heis = element_orders(Group.HEISENBERG, p)
    semi = element_orders(Group.SEMIDIRECT, p)
    assert sum(heis.values()) == sum(semi.values()) == p**3
    assert max(heis) == p and max(semi) == p * p


@pytest.mark.parametrize("group", list(Group))
def test_group_axioms(group):
    elems, mul, _ = group_elements(group, 3)
    elems = list(elems)
    assert len(set(elems)) == 27
    assert all(mul(mul(a, b), c) == mul(a, mul(b, c)) for a in elems[:9] for b in elems for c in elems[::5])
    assert any(mul(a, b) != mul(b, a) for a in elems for b in elems)


def test_heisenberg_27_distribution():
    d = cycle_type_distribution(Group.HEISENBERG, 3)
    assert d == {(1,) * 9: Fraction(1, 27), (1, 1, 1, 3, 3): Fraction(2, 9), (3, 3, 3): Fraction(20, 27)}
    assert (9,) not in d


def test_semidirect_has_9_cycles():
    d = cycle_type_distribution(Group.SEMIDIRECT, 3)
    assert d[(9,)] == Fraction(2, 3)
    assert sum(d.values()) == 1


def test_action_is_transitive_and_faithful():
    types = coset_cycle_types(Group.HEISENBERG, 3)
    assert types.count((1,) * 9) == 1
