import pytest

from p3ext.fixtures import EX51_POLY
from p3ext.poly import RationalPoly
from p3ext.stats import galois_stats


def test_ex51_polynomial_is_heisenberg_shaped():
    rep = galois_stats(EX51_POLY, "heisenberg", prime_bound=5000)
    assert rep.passed and not rep.impossible
    assert rep.tv_distance < 0.1


def test_wrong_group_shows_up():
    # Phi_9 composed with nothing: a cyclic sextic is not of degree p^2
    with pytest.raises(ValueError):
        galois_stats(RationalPoly([1, 0, 0, 1, 0, 0, 1]), "heisenberg", prime_bound=100)


def test_semidirect_patterns_are_impossible_for_heisenberg():
    """X^9 - 2 over Q has 9-cycles mod l, which H_27 cannot produce."""
    rep = galois_stats(RationalPoly([-2] + [0] * 8 + [1]), "heisenberg", prime_bound=2000)
    assert not rep.passed
