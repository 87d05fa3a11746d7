"""Ramified primes of Q(alpha) from a defining polynomial.

Candidates are the prime divisors of the discriminant of a monic integral
model. A candidate l is unramified when f is squarefree mod l, and ramified
when Dedekind's test says Z[alpha] is l-maximal while f has a repeated factor
mod l. Otherwise an l-maximal order is built and l is ramified iff l divides
its discriminant.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from . import fpoly
from .config import DEFAULT_SETTINGS, Settings
from .localorder import l_valuation_of_field_disc
from .ntheory import factor_integer
from .poly import RationalPoly, bareiss_det

__all__ = [
    "Status",
    "RamReport",
    "monic_integral_model",
    "sylvester_matrix",
    "poly_disc",
    "dedekind_maximal",
    "prime_status",
    "ram_set",
]


class Status(str, Enum):
    RAMIFIED = "ramified"
    UNRAMIFIED = "unramified"
    INCONCLUSIVE = "inconclusive"


def monic_integral_model(f: RationalPoly) -> tuple[RationalPoly, int]:
    """(c^n f(X/c), c) for the smallest c making the monic f integral."""
    if f.degree < 1:
        raise ValueError("need a polynomial of positive degree")
    g = f.monic()
    c = g.integral_scaling()
    return g.scaled(c), c


def sylvester_matrix(f: list[int], g: list[int]) -> list[list[int]]:
    """Sylvester matrix of two integer polynomials given in ascending order."""
    n, m = len(f) - 1, len(g) - 1
    size = n + m
    rows = []
    fd, gd = f[::-1], g[::-1]
    for i in range(m):
        rows.append([0] * i + fd + [0] * (size - n - 1 - i))
    for i in range(n):
        rows.append([0] * i + gd + [0] * (size - m - 1 - i))
    return rows


def _disc_integral(coeffs: list[int]) -> int:
    n = len(coeffs) - 1
    if n == 1:
        return 1
    df = [i * c for i, c in enumerate(coeffs)][1:]
    res = bareiss_det(sylvester_matrix(coeffs, df))
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    q, r = divmod(sign * res, coeffs[-1])
    assert r == 0
    return q


def poly_disc(f: RationalPoly) -> int:
    """Discriminant of the monic integral model of f (resultant of f and f')."""
    g, _ = monic_integral_model(f)
    if not g.is_squarefree():
        raise ValueError("polynomial is not squarefree")
    return _disc_integral(g.integer_coeffs())


def dedekind_maximal(coeffs: list[int], l: int) -> bool:
    """True iff l does not divide the index of Z[X]/(f) in the maximal order."""
    fbar = fpoly.reduce_mod(coeffs, l)
    g = fpoly.radical(fbar, l)
    h = fpoly.divmod_poly(fbar, g, l)[0]
    # lift with coefficients in [0, l) and form (g*h - f)/l over Z
    n = max(len(g) + len(h) - 1, len(coeffs))
    prod = [0] * (len(g) + len(h) - 1)
    for i, a in enumerate(g):
        for j, b in enumerate(h):
            prod[i + j] += a * b
    prod += [0] * (n - len(prod))
    F = []
    for i in range(n):
        d = prod[i] - (coeffs[i] if i < len(coeffs) else 0)
        assert d % l == 0
        F.append(d // l)
    Fbar = fpoly.reduce_mod(F, l)
    return len(fpoly.gcd(fpoly.gcd(Fbar, g, l), h, l)) == 1


def prime_status(f: RationalPoly, l: int, settings: Optional[Settings] = None) -> tuple[Status, str]:
    """Certify l as ramified or unramified in Q[X]/(f)."""
    g, _ = monic_integral_model(f)
    coeffs = g.integer_coeffs()
    fbar = fpoly.reduce_mod(coeffs, l)
    if fpoly.is_squarefree(fbar, l):
        return Status.UNRAMIFIED, f"squarefree mod {l}"
    if dedekind_maximal(coeffs, l):
        return Status.RAMIFIED, f"Z[alpha] is {l}-maximal and f has a repeated factor mod {l}"
    try:
        v = l_valuation_of_field_disc(coeffs, _disc_integral(coeffs), l)
    except ArithmeticError as exc:
        return Status.INCONCLUSIVE, f"{l}-maximal order failed: {exc}"
    if v > 0:
        return Status.RAMIFIED, f"{l}-maximal order has discriminant valuation {v}"
    return Status.UNRAMIFIED, f"{l}-maximal order has discriminant prime to {l}"


@dataclass
class RamReport:
    disc: int
    scaling: int
    statuses: dict[int, Status]
    reasons: dict[int, str] = field(default_factory=dict)

    @property
    def ramified(self) -> list[int]:
        return sorted(q for q, s in self.statuses.items() if s is Status.RAMIFIED)

    @property
    def inconclusive(self) -> list[int]:
        return sorted(q for q, s in self.statuses.items() if s is Status.INCONCLUSIVE)

    @property
    def final_set(self) -> Optional[list[int]]:
        return None if self.inconclusive else self.ramified

    def to_json(self) -> dict:
        return {
            "disc": str(self.disc),
            "scaling": self.scaling,
            "candidates": sorted(self.statuses),
            "statuses": {str(q): s.value for q, s in sorted(self.statuses.items())},
            "reasons": {str(q): r for q, r in sorted(self.reasons.items())},
            "ram_set": self.final_set,
            "inconclusive": self.inconclusive,
        }


def ram_set(f: RationalPoly, settings: Optional[Settings] = None) -> RamReport:
    settings = settings or DEFAULT_SETTINGS
    g, c = monic_integral_model(f)
    disc = poly_disc(f)
    primes = factor_integer(abs(disc), settings.factor_bound, settings.factor_max_digits)
    statuses, reasons = {}, {}
    for l in sorted(primes):
        s, why = prime_status(g, l, settings)
        statuses[l], reasons[l] = s, why
    return RamReport(disc, c, statuses, reasons)
