"""Factorization patterns of f mod l compared with the expected Galois group."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import fpoly
from .arith import Group
from .groups import cycle_type_distribution
from .ntheory import primes_up_to
from .poly import RationalPoly
from .ramify import monic_integral_model, poly_disc

__all__ = ["StatsReport", "galois_stats"]


@dataclass
class StatsReport:
    group: Group
    degree: int
    prime_bound: int
    primes_used: int
    counts: dict[tuple[int, ...], int]
    expected: dict[tuple[int, ...], Fraction]
    impossible: dict[tuple[int, ...], int]
    tv_distance: float

    @property
    def fully_split_frequency(self) -> float:
        split = (1,) * self.degree
        return self.counts.get(split, 0) / self.primes_used if self.primes_used else 0.0

    @property
    def passed(self) -> bool:
        return not self.impossible

    def to_json(self) -> dict:
        def key(t):
            return "+".join(map(str, t))

        return {
            "group": self.group.value,
            "prime_bound": self.prime_bound,
            "primes_used": self.primes_used,
            "frequencies": {key(t): c / self.primes_used for t, c in sorted(self.counts.items())},
            "counts": {key(t): c for t, c in sorted(self.counts.items())},
            "expected": {key(t): float(v) for t, v in self.expected.items()},
            "impossible": {key(t): c for t, c in sorted(self.impossible.items())},
            "fully_split_frequency": self.fully_split_frequency,
            "tv_distance": self.tv_distance,
            "passed": self.passed,
        }


def galois_stats(f: RationalPoly, expected: Group | str, prime_bound: int = 10**5, p: Optional[int] = None) -> StatsReport:
    """Count factorization patterns of f mod l for primes l <= prime_bound not dividing disc(f).

    The patterns are compared with the cycle types of the expected group
    acting on p^2 points; a pattern of zero expected density is a hard failure.
    """
    group = Group.parse(expected)
    g, _ = monic_integral_model(f)
    if not g.is_squarefree():
        raise ValueError("polynomial is not squarefree")
    n = g.degree
    if p is None:
        p = round(n**0.5)
    if p * p != n:
        raise ValueError(f"degree {n} is not a prime square")
    disc = poly_disc(g)
    coeffs = g.integer_coeffs()
    counts: Counter = Counter()
    used = 0
    for l in primes_up_to(prime_bound):
        if disc % l == 0:
            continue
        pattern = fpoly.distinct_degree_pattern(fpoly.reduce_mod(coeffs, l), l)
        counts[pattern] += 1
        used += 1
    exp = cycle_type_distribution(group, p)
    impossible = {t: c for t, c in counts.items() if t not in exp}
    support = set(exp) | set(counts)
    tv = 0.5 * sum(abs((counts.get(t, 0) / used if used else 0.0) - float(exp.get(t, 0))) for t in support)
    return StatsReport(group, n, prime_bound, used, dict(counts), exp, impossible, tv)
