import pytest

from p3ext.arith import MapContext
from p3ext.ideals import ideal_criterion
from p3ext.search import SearchSpec, combination_text, default_support, search

from conftest import tower


def test_finds_the_r7_element():
    t = tower("3,7")
    hits = search(SearchSpec(t, height=1, support=["d", "z", "1"]))
    assert "d + z" in [h.text for h in hits]


def test_hits_revalidate_and_are_deterministic():
    t = tower("3,13")
    spec = SearchSpec(t, height=1, max_results=5)
    a, b = search(spec), search(SearchSpec(t, height=1, max_results=5))
    assert [h.coefficients for h in a] == [h.coefficients for h in b]
    maps = MapContext(t)
    assert all(ideal_criterion(maps, h.x).verdict for h in a)


def test_minimal_ramification_finds_zeta9_plus_2():
    t = tower("zeta9,e=2")
    hits = search(SearchSpec(t, height=2, support=["1", "z9"], minimal_ramification=True, max_results=20))
    by_text = {h.text: h for h in hits}
    assert "2 + z9" in by_text
    # Nr = 57 = 3 * 19; the only prime besides p is 19, which splits completely
    assert by_text["2 + z9"].report.norm == 57


@pytest.mark.parametrize("name", ["3,7", "3,13", "3,19", "zeta9,e=2"])
def test_every_fixture_tower_has_a_hit(name):
    assert search(SearchSpec(tower(name), height=1, max_results=1))


def test_limits():
    t = tower("3,7")
    assert search(SearchSpec(t, max_results=0)) == []
    assert search(SearchSpec(t, max_candidates=0)) == []
    with pytest.raises(ValueError):
        SearchSpec(t, minimal_ramification=True)
    with pytest.raises(ValueError):
        SearchSpec(t, height=0)


def test_support_and_text():
    assert default_support(tower("3,7")) == ["1", "d", "d^2", "z", "d*z", "d^2*z"]
    assert combination_text((1, -2, 0), ["1", "d", "z"]) == "1 - 2*d"
    assert combination_text((-1, 1), ["d", "z"]) == "-d + z"
