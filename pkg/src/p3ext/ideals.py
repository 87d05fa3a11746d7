"""Prime splitting, valuations at primes of K = Q(zeta_p), chi and the ideal criterion.

Valuations are only ever taken at primes of K: for q = 1 (mod p) the
cyclotomic polynomial Phi_p splits into linear factors mod q, so each prime
above q is given by a root of Phi_p, and a Hensel lift of that root evaluates
elements of Z[zeta_p] q-adically.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Optional

from sympy import integer_nthroot

from .config import DEFAULT_SETTINGS, Settings
from .cyclo import CycloElement
from .ntheory import factor_rational, is_prime, units_mod, valuation
from .tower import TowerContext

__all__ = [
    "SplitType",
    "SplitPrimeK",
    "PrecisionError",
    "CriterionEntry",
    "CriterionReport",
    "WitnessResult",
    "splitting_type",
    "primes_above_in_K",
    "valuation_at",
    "chi",
    "ideal_criterion",
    "nonpower_witness",
    "certify_pth_power",
]


class PrecisionError(ArithmeticError):
    pass


@dataclass(frozen=True)
class SplitType:
    g: int
    f: int
    e_ram: int

    def to_json(self) -> dict:
        return {"g": self.g, "f": self.f, "e_ram": self.e_ram}


def splitting_type(tower: TowerContext, q: int, field: str = "L") -> SplitType:
    """Decomposition numbers of q in a subfield, read off (Z/m)^*.

    With m = q^a * m', the decomposition group of q in Q(zeta_m) is
    {k : k mod m' in <q mod m'>} and the inertia group is {k : k = 1 mod m'}.
    Their images in G/H give e and e*f.
    """
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    m = tower.m
    H = tower.subgroup(field)
    G = units_mod(m)
    m1 = m
    while m1 % q == 0:
        m1 //= q
    if m1 == 1:
        cyc = {0}
    else:
        cyc, x = set(), 1 % m1
        while x not in cyc:
            cyc.add(x)
            x = x * q % m1
    D = [k for k in G if k % m1 in cyc] if m1 > 1 else list(G)
    I = [k for k in G if k % m1 == 1 % m1]
    e_ram = len(I) // sum(1 for k in I if k in H)
    ef = len(D) // sum(1 for k in D if k in H)
    degree = len(G) // len(H)
    return SplitType(g=degree // ef, f=ef // e_ram, e_ram=e_ram)


# -- primes of K above a split q ---------------------------------------------


def _hensel_root(root: int, q: int, p: int, B: int) -> int:
    """Lift a root of X^p - 1 (other than 1) from mod q to mod q^B by Newton steps."""
    x, prec = root % q, 1
    while prec < B:
        prec = min(2 * prec, B)
        mod = q**prec
        fx = (pow(x, p, mod) - 1) % mod
        dfx = p * pow(x, p - 1, mod) % mod
        x = (x - fx * pow(dfx, -1, mod)) % mod
    return x


@dataclass(frozen=True)
class SplitPrimeK:
    q: int
    root: int
    precision: int = 1
    lifted: int = field(default=0)

    def __post_init__(self) -> None:
        if self.lifted == 0:
            object.__setattr__(self, "lifted", self.root)

    def lift(self, B: int, p: int) -> "SplitPrimeK":
        if B <= self.precision:
            return self
        return SplitPrimeK(self.q, self.root, B, _hensel_root(self.root, self.q, p, B))

    def to_json(self) -> dict:
        return {"q": self.q, "root": self.root}


def _roots_of_phi_p(p: int, q: int) -> list[int]:
    return sorted(a for a in range(2, q) if pow(a, p, q) == 1)


def _ordered_roots(p: int, q: int, step: int) -> list[int]:
    roots = _roots_of_phi_p(p, q)
    out = [roots[0]]
    while len(out) < p - 1:
        out.append(pow(out[-1], step, q))
    assert sorted(out) == roots, "root orbit does not cover all primes above q"
    return out


def _k_coords(tower: TowerContext, x: CycloElement) -> tuple[list[int], int]:
    """Integer coordinates of x in the basis zeta_p^j plus a common denominator."""
    coords = tower.K_space.coordinates(x)
    den = lcm(*(c.denominator for c in coords)) if coords else 1
    return [int(c * den) for c in coords], den


def _val_from_coords(nums: list[int], den: int, P: SplitPrimeK, p: int, cap: int) -> int:
    q = P.q
    B = max(P.precision, 4)
    while True:
        if B > cap:
            raise PrecisionError(f"valuation at q={q} not determined below precision {cap}")
        Pl = P.lift(B, p)
        mod = q**B
        acc = 0
        for c in reversed(nums):
            acc = (acc * Pl.lifted + c) % mod
        if acc:
            return valuation(acc, q) - valuation(den, q)
        B *= 2


def valuation_at(tower: TowerContext, x: CycloElement, P: SplitPrimeK, cap: int = 64) -> int:
    """v_P(x) for x in K."""
    if x.is_zero():
        raise ZeroDivisionError("valuation of zero")
    nums, den = _k_coords(tower, x)
    return _val_from_coords(nums, den, P, tower.p, cap)


@lru_cache(maxsize=64)
def _transport_step(tower: TowerContext) -> int:
    """Exponent s with tau(P_root) = P_(root^s), checked by valuations.

    The default guess is e^-1 mod p; if the transport identity
    v_(tau P)(tau x) = v_P(x) fails on the test elements, the inverse is used.
    """
    p = tower.p
    e_inv = pow(tower.e % p, -1, p)
    q = next(n for n in range(p + 1, 10**6) if n % p == 1 and is_prime(n))
    tests = [tower.zeta_p - r for r in _roots_of_phi_p(p, q)]
    for step in (e_inv, tower.e % p):
        roots = _ordered_roots(p, q, step)
        primes = [SplitPrimeK(q, r) for r in roots]
        ok = True
        for x in tests:
            tx = tower.tau_bar(x)
            for j, P in enumerate(primes):
                nxt = primes[(j + 1) % len(primes)]
                if valuation_at(tower, tx, nxt) != valuation_at(tower, x, P):
                    ok = False
        if ok:
            return step
    raise AssertionError("neither root transport convention matches tau")


def primes_above_in_K(tower: TowerContext, q: int) -> list[SplitPrimeK]:
    """The p-1 primes of K above q, ordered so that P_(j+1) = tau(P_j)."""
    p = tower.p
    if q % p != 1 or not is_prime(q):
        raise ValueError(f"q = {q} is not a prime congruent to 1 mod {p}")
    return [SplitPrimeK(q, r) for r in _ordered_roots(p, q, _transport_step(tower))]


def chi(betas: list[int] | tuple[int, ...], p: int, e: int) -> int:
    """e^(p-2) b_1 + e^(p-3) b_(p-1) + ... + e b_3 + b_2 with e taken in 1..p-1."""
    if len(betas) != p - 1:
        raise ValueError(f"expected {p - 1} exponents, got {len(betas)}")
    e = e % p
    return sum(e ** (p - 2 - k) * betas[(-k) % (p - 1)] for k in range(p - 1))


# -- the criterion -------------------------------------------------------------


@dataclass(frozen=True)
class CriterionEntry:
    q: int
    l: int
    splits_completely_in_L: bool
    betas: Optional[tuple[int, ...]]
    chi: Optional[int]
    chi_div_p: Optional[bool]

    @property
    def decisive(self) -> bool:
        return self.splits_completely_in_L and self.chi_div_p is False

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "l": self.l,
            "splits_completely_in_L": self.splits_completely_in_L,
            "betas": list(self.betas) if self.betas is not None else None,
            "chi": self.chi,
            "chi_div_p": self.chi_div_p,
        }


@dataclass(frozen=True)
class CriterionReport:
    norm: Fraction
    entries: tuple[CriterionEntry, ...]
    verdict: bool
    witness_index: Optional[int]

    def to_json(self) -> dict:
        return {
            "norm": [str(self.norm.numerator), str(self.norm.denominator)],
            "entries": [en.to_json() for en in self.entries],
            "verdict": self.verdict,
            "witness_index": self.witness_index,
        }


def ideal_criterion(maps, x: CycloElement, settings: Optional[Settings] = None) -> CriterionReport:
    """Decide whether x generates a non-p-th-power ideal in a usable way.

    The verdict is true iff some prime q of Nr_(L/Q)(x) splits completely in L
    and the chi value of the q-part of Nr_(L/K)(x) is prime to p.
    """
    settings = settings or DEFAULT_SETTINGS
    tower = maps.tower
    p = tower.p
    if x.is_zero():
        raise ZeroDivisionError("criterion of zero")
    gamma = maps.norm_L_over_K(x)
    norm = maps.norm_K_over_Q(gamma)
    _, fac = factor_rational(norm, trial_bound=settings.factor_bound)
    entries = []
    nums, den = _k_coords(tower, gamma)
    for q in sorted(fac):
        l = fac[q]
        split = splitting_type(tower, q, "L").g == p * (p - 1)
        betas = c = div = None
        if q % p == 1:
            primes = primes_above_in_K(tower, q)
            betas = tuple(_val_from_coords(nums, den, P, p, settings.hensel_cap) for P in primes)
            assert sum(betas) == l, "exponent sum mismatch"
            c = chi(betas, p, tower.e)
            div = c % p == 0
        entries.append(CriterionEntry(q, l, split, betas, c, div))
    witness = next((i for i, en in enumerate(entries) if en.decisive), None)
    return CriterionReport(norm, tuple(entries), witness is not None, witness)


# -- element-level p-th power tests ------------------------------------------


@dataclass(frozen=True)
class WitnessResult:
    witnessed_nonpower: bool
    witness: Optional[int]
    tried: int

    def to_json(self) -> dict:
        return {"witnessed_nonpower": self.witnessed_nonpower, "witness": self.witness, "tried": self.tried}


def _root_of_cyclotomic_mod(m: int, s: int) -> int:
    """A primitive m-th root of unity modulo a prime s = 1 (mod m)."""
    from .ntheory import factor_integer

    qs = list(factor_integer(m)) if m > 1 else []
    for g in range(2, s):
        rho = pow(g, (s - 1) // m, s)
        if all(pow(rho, m // q, s) != 1 for q in qs):
            return rho
    raise ArithmeticError(f"no primitive {m}-th root of unity mod {s}")


def nonpower_witness(tower: TowerContext, b: CycloElement, settings: Optional[Settings] = None) -> WitnessResult:
    """Look for a prime s = 1 (mod m) at which b is not a p-th power residue.

    A True result proves b is not a p-th power in L. A False result after
    ``witness_nmax`` primes is inconclusive.
    """
    settings = settings or DEFAULT_SETTINGS
    if b.is_zero():
        raise ZeroDivisionError("witness test of zero")
    m, p = b.m, tower.p
    nums, den = b.numerators, b.denominator
    tried = 0
    s = 1
    while tried < settings.witness_nmax:
        s += m
        if not is_prime(s) or den % s == 0:
            continue
        rho = _root_of_cyclotomic_mod(m, s)
        val = 0
        for c in reversed(nums):
            val = (val * rho + c) % s
        if val == 0:
            continue
        tried += 1
        if pow(val * pow(den, -1, s) % s, (s - 1) // p, s) != 1:
            return WitnessResult(True, s, tried)
    return WitnessResult(False, None, tried)


def _is_rational_pth_power(c: Fraction, p: int) -> bool:
    # p is odd, so the sign is always a p-th power
    return bool(integer_nthroot(abs(c.numerator), p)[1] and integer_nthroot(c.denominator, p)[1])


def certify_pth_power(tower: TowerContext, b: CycloElement) -> bool:
    """Exact certificate that b is a p-th power in L, for b = (rational) * (root of unity).

    Returns False when no certificate is found, which proves nothing.
    """
    if b.is_zero():
        return False
    m, p = b.m, tower.p
    M = m if m % 2 == 0 else 2 * m
    for k in range(M):
        # zeta_M^k as an element of Q(zeta_m): zeta_M = -zeta_m^((m+1)/2) when M = 2m
        if M == m:
            z = CycloElement.zeta(m, k)
        else:
            z = CycloElement.zeta(m, (k * (m + 1) // 2) % m) * (-1) ** k
        c = b * z.inverse()
        if not c.is_rational():
            continue
        if not _is_rational_pth_power(c.rational_value(), p):
            return False
        for j in range(M):
            if (j * p - k) % M:
                continue
            if M == m:
                w = CycloElement.zeta(m, j)
            else:
                w = CycloElement.zeta(m, (j * (m + 1) // 2) % m) * (-1) ** j
            if tower.contains("L", w):
                return True
        return False
    return False
