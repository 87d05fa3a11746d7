"""Brute-force enumeration of the two non-abelian groups of order p^3.

Each group acts on the p^2 left cosets of a non-central subgroup of order p,
which is the action of the Galois group on the roots of Irr(alpha). The
cycle types of that action give the expected factorization patterns mod l.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .arith import Group

__all__ = ["group_elements", "coset_cycle_types", "cycle_type_distribution", "element_orders"]

Elem = tuple[int, int, int]


def _heisenberg(p: int) -> tuple[list, Callable, list]:
    # (a, b, c) is the unitriangular matrix [[1, a, c], [0, 1, b], [0, 0, 1]]
    elems = [(a, b, c) for a in range(p) for b in range(p) for c in range(p)]

    def mul(x, y):
        return ((x[0] + y[0]) % p, (x[1] + y[1]) % p, (x[2] + y[2] + x[0] * y[1]) % p)

    sub = [(a, 0, 0) for a in range(p)]
    return elems, mul, sub


def _semidirect(p: int) -> tuple[list, Callable, list]:
    # (x, y) = u^x v^y with v u v^-1 = u^(1+p), u of order p^2, v of order p
    n = p * p
    elems = [(x, y) for x in range(n) for y in range(p)]

    def mul(g, h):
        return ((g[0] + pow(1 + p, g[1], n) * h[0]) % n, (g[1] + h[1]) % p)

    sub = [(0, y) for y in range(p)]
    return elems, mul, sub


def group_elements(group: Group | str, p: int) -> tuple[list, Callable, list]:
    group = Group.parse(group)
    return _heisenberg(p) if group is Group.HEISENBERG else _semidirect(p)


def element_orders(group: Group | str, p: int) -> Counter:
    elems, mul, _ = group_elements(group, p)
    identity = elems[0]
    out: Counter = Counter()
    for g in elems:
        k, h = 1, g
        while h != identity:
            h = mul(h, g)
            k += 1
        out[k] += 1
    return out


def coset_cycle_types(group: Group | str, p: int) -> list[tuple[int, ...]]:
    """Cycle type (sorted cycle lengths) of each element acting on G/H."""
    elems, mul, sub = group_elements(group, p)
    cosets: dict = {}
    reps = []
    for g in elems:
        key = frozenset(mul(g, h) for h in sub)
        if key not in cosets:
            cosets[key] = len(reps)
            reps.append(g)
    index = {g: cosets[frozenset(mul(g, h) for h in sub)] for g in elems}
    assert len(reps) == p * p
    out = []
    for g in elems:
        perm = [index[mul(g, r)] for r in reps]
        seen = [False] * len(perm)
        lengths = []
        for i in range(len(perm)):
            if not seen[i]:
                n, j = 0, i
                while not seen[j]:
                    seen[j] = True
                    j = perm[j]
                    n += 1
                lengths.append(n)
        out.append(tuple(sorted(lengths)))
    return out


@lru_cache(maxsize=None)
def cycle_type_distribution(group: Group | str, p: int) -> dict[tuple[int, ...], Fraction]:
    types = coset_cycle_types(group, p)
    counts = Counter(types)
    return {t: Fraction(c, len(types)) for t, c in sorted(counts.items())}
