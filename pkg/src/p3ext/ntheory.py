"""Integer number theory used throughout: primality, factoring, orders, roots."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from sympy import factorint as _sympy_factorint
from sympy import isprime as _sympy_isprime
from sympy import primerange

__all__ = [
    "is_prime",
    "primes_up_to",
    "factor_integer",
    "factor_rational",
    "euler_phi",
    "divisors",
    "multiplicative_order",
    "primitive_root",
    "is_primitive_root",
    "crt",
    "valuation",
    "units_mod",
    "FactorizationError",
]


class FactorizationError(ArithmeticError):
    pass


def is_prime(n: int) -> bool:
    return n > 1 and bool(_sympy_isprime(n))


def primes_up_to(bound: int) -> list[int]:
    """Primes ``<= bound`` in increasing order."""
    return list(primerange(2, bound + 1))


def _trial_division(n: int, bound: int) -> tuple[dict[int, int], int]:
    found: dict[int, int] = {}
    for q in (2, 3):
        while n % q == 0:
            found[q] = found.get(q, 0) + 1
            n //= q
    q, step = 5, 2
    while q <= bound and q * q <= n:
        while n % q == 0:
            found[q] = found.get(q, 0) + 1
            n //= q
        q += step
        step = 6 - step
    return found, n


def factor_integer(n: int, trial_bound: int = 10**6, max_digits: int = 60) -> dict[int, int]:
    """Factor ``|n|`` into primes.

    Trial division up to ``trial_bound``; the cofactor goes to a Pollard-rho /
    ECM factorizer. Cofactors above ``max_digits`` decimal digits raise
    :class:`FactorizationError` instead of running unbounded.
    """
    n = abs(int(n))
    if n == 0:
        raise ValueError("cannot factor 0")
    found, rest = _trial_division(n, trial_bound)
    if rest == 1:
        return found
    if rest < trial_bound * trial_bound or is_prime(rest):
        found[int(rest)] = found.get(int(rest), 0) + 1
        return found
    if len(str(rest)) > max_digits:
        raise FactorizationError(f"cofactor with {len(str(rest))} digits exceeds bound")
    for q, k in _sympy_factorint(rest).items():
        found[int(q)] = found.get(int(q), 0) + int(k)
    return found


def factor_rational(x: Fraction, trial_bound: int = 10**6) -> tuple[int, dict[int, int]]:
    """Return ``(sign, {q: l})`` with ``x = sign * prod q**l`` and ``l`` possibly negative."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("cannot factor 0")
    out = dict(factor_integer(x.numerator, trial_bound))
    if x.denominator != 1:
        for q, k in factor_integer(x.denominator, trial_bound).items():
            out[q] = out.get(q, 0) - k
    return (1 if x > 0 else -1), dict(sorted(out.items()))


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    result = n
    for q in factor_integer(n):
        result -= result // q
    return result


def divisors(n: int) -> list[int]:
    divs = [1]
    for q, k in factor_integer(n).items():
        divs = [d * q**i for d in divs for i in range(k + 1)]
    return sorted(divs)


def multiplicative_order(a: int, n: int) -> int:
    a %= n
    if gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    order = euler_phi(n)
    for q in factor_integer(order):
        while order % q == 0 and pow(a, order // q, n) == 1:
            order //= q
    return order


def is_primitive_root(g: int, n: int) -> bool:
    """True when ``g`` generates ``(Z/n)^*`` (``n`` prime)."""
    if gcd(g, n) != 1:
        return False
    return multiplicative_order(g, n) == n - 1


def primitive_root(n: int) -> int:
    """Smallest positive primitive root modulo the prime ``n``."""
    if not is_prime(n):
        raise ValueError(f"{n} is not prime")
    if n == 2:
        return 1
    qs = list(factor_integer(n - 1))
    for g in range(2, n):
        if all(pow(g, (n - 1) // q, n) != 1 for q in qs):
            return g
    raise AssertionError("no primitive root found")  # unreachable for prime n


def crt(residues: list[int], moduli: list[int]) -> int:
    """Smallest non-negative solution of ``x = r_i (mod n_i)`` for coprime moduli."""
    x, n = 0, 1
    for r, m in zip(residues, moduli):
        if gcd(n, m) != 1:
            raise ValueError("moduli must be pairwise coprime")
        t = ((r - x) * pow(n, -1, m)) % m
        x += n * t
        n *= m
    return x % n


def valuation(n: int, q: int) -> int:
    """q-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    n = abs(n)
    v = 0
    while n % q == 0:
        n //= q
        v += 1
    return v


@lru_cache(maxsize=None)
def units_mod(m: int) -> tuple[int, ...]:
    return tuple(k for k in range(1, m + 1) if gcd(k, m) == 1)
