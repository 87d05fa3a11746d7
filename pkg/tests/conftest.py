from hypothesis import HealthCheck, settings, strategies as st

from p3ext.cyclo import CycloElement
from p3ext.search import default_support
from p3ext.expr import element_from_text
from p3ext.tower import build_tower

# Fixed seed: every property run sees the same 100 cases.
settings.register_profile(
    "p3ext",
    max_examples=100,
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("p3ext")

TOWERS = {
    "3,7": dict(p=3, r=7),
    "3,13": dict(p=3, r=13),
    "3,19": dict(p=3, r=19, sigma=6),
    "3,7,e=-1": dict(p=3, r=7, e=-1),
    "zeta9,e=2": dict(p=3, zeta_p2=True, e=2),
    "5,11": dict(p=5, r=11),
}


def tower(name):
    return build_tower(**TOWERS[name])


towers = st.sampled_from(sorted(TOWERS)).map(tower)


@st.composite
def elements_of_L(draw, t, height=2):
    """Nonzero integer combinations of the default support of L."""
    basis = [element_from_text(s, t) for s in default_support(t)]
    coeffs = draw(st.lists(st.integers(-height, height), min_size=len(basis), max_size=len(basis)))
    x = CycloElement.zero(t.m)
    for c, b in zip(coeffs, basis):
        if c:
            x = x + b * c
    if x.is_zero():
        x = x + 1
    return x


@st.composite
def tower_and_element(draw, names=None, height=2):
    t = tower(draw(st.sampled_from(names or sorted(TOWERS))))
    return t, draw(elements_of_L(t, height))


@st.composite
def elements_of_K(draw, t, height=5):
    coeffs = draw(st.lists(st.integers(-height, height), min_size=t.p - 1, max_size=t.p - 1))
    x = CycloElement.zero(t.m)
    for j, c in enumerate(coeffs):
        if c:
            x = x + t.zeta_p**j * c
    return x if x else x + 1


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
