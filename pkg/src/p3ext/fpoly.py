"""Polynomials over F_l as ascending lists of ints in [0, l)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

__all__ = [
    "reduce_mod",
    "trim",
    "sub",
    "mul",
    "divmod_poly",
    "gcd",
    "powmod_x",
    "derivative",
    "is_squarefree",
    "squarefree_parts",
    "radical",
    "distinct_degree_pattern",
]


def trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def reduce_mod(coeffs: Sequence[int | Fraction], l: int) -> list[int]:
    out = []
    for c in coeffs:
        if isinstance(c, Fraction):
            if c.denominator % l == 0:
                raise ZeroDivisionError(f"denominator divisible by {l}")
            out.append(c.numerator * pow(c.denominator, -1, l) % l)
        else:
            out.append(c % l)
    return trim(out)


def sub(a: list[int], b: list[int], l: int) -> list[int]:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return trim([(x - y) % l for x, y in zip(a, b)])


def mul(a: list[int], b: list[int], l: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim([c % l for c in out])


def divmod_poly(a: list[int], b: list[int], l: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    r = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, l)
    q = [0] * max(0, len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i] * inv % l
        if c:
            q[i - db] = c
            for j, y in enumerate(b):
                r[i - db + j] = (r[i - db + j] - c * y) % l
    return trim(q), trim(r[:db])


def _monic(a: list[int], l: int) -> list[int]:
    if not a:
        return a
    inv = pow(a[-1], -1, l)
    return [c * inv % l for c in a]


def gcd(a: list[int], b: list[int], l: int) -> list[int]:
    a, b = trim(list(a)), trim(list(b))
    while b:
        a, b = b, divmod_poly(a, b, l)[1]
    return _monic(a, l)


def _mulmod(a: list[int], b: list[int], f: list[int], l: int) -> list[int]:
    return divmod_poly(mul(a, b, l), f, l)[1]


def powmod_x(base: list[int], n: int, f: list[int], l: int) -> list[int]:
    """base^n mod f."""
    out = [1]
    base = divmod_poly(base, f, l)[1]
    while n:
        if n & 1:
            out = _mulmod(out, base, f, l)
        base = _mulmod(base, base, f, l)
        n >>= 1
    return out


def derivative(a: list[int], l: int) -> list[int]:
    return trim([i * c % l for i, c in enumerate(a)][1:])


def is_squarefree(a: list[int], l: int) -> bool:
    return len(gcd(a, derivative(a, l), l)) == 1


def _pth_root(a: list[int], l: int) -> list[int]:
    # over F_l the Frobenius is the identity on coefficients
    return [a[i] for i in range(0, len(a), l)]


def squarefree_parts(a: list[int], l: int) -> list[tuple[list[int], int]]:
    """[(g_i, i)] with a = lc * prod g_i^i and the g_i squarefree, coprime (Yun with l-th roots)."""
    a = _monic(trim(list(a)), l)
    out: list[tuple[list[int], int]] = []
    if len(a) <= 1:
        return out
    d = derivative(a, l)
    if not d:
        return [(g, i * l) for g, i in squarefree_parts(_pth_root(a, l), l)]
    c = gcd(a, d, l)
    w = divmod_poly(a, c, l)[0]
    i = 1
    while len(w) > 1:
        y = gcd(w, c, l)
        z = divmod_poly(w, y, l)[0]
        if len(z) > 1:
            out.append((z, i))
        i += 1
        w = y
        c = divmod_poly(c, y, l)[0]
    if len(c) > 1:
        out += [(g, k * l) for g, k in squarefree_parts(_pth_root(c, l), l)]
    return out


def radical(a: list[int], l: int) -> list[int]:
    out = [1]
    for g, _ in squarefree_parts(a, l):
        out = mul(out, g, l)
    return _monic(out, l)


def distinct_degree_pattern(f: list[int], l: int) -> tuple[int, ...]:
    """Sorted degrees of the irreducible factors of a squarefree f mod l."""
    f = _monic(trim(list(f)), l)
    degrees: list[int] = []
    x = [0, 1]
    h = x
    i = 1
    while len(f) - 1 >= 2 * i:
        h = powmod_x(h, l, f, l)
        diff = sub(h, x, l)
        g = gcd(f, diff, l)
        k = len(g) - 1
        if k:
            degrees += [i] * (k // i)
            f = divmod_poly(f, g, l)[0]
            h = divmod_poly(h, f, l)[1]
        i += 1
    if len(f) > 1:
        degrees.append(len(f) - 1)
    return tuple(sorted(degrees))
