"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Elements are stored in the power basis ``1, z, ..., z^(phi(m)-1)`` reduced modulo
the m-th cyclotomic polynomial, as an integer numerator vector over a single
positive denominator. The pair is kept gcd-reduced, so two elements are equal
exactly when their stored vectors are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Any, Iterable, Sequence

from .ntheory import divisors, euler_phi, units_mod
from .poly import RationalPoly

__all__ = [
    "MAX_CONDUCTOR",
    "ConductorMismatch",
    "NotInSubfield",
    "cyclotomic_poly",
    "CycloElement",
    "Automorphism",
    "apply",
    "coerce",
    "orbit_product",
    "conjugates",
    "min_poly_over_Q",
    "Subspace",
]

MAX_CONDUCTOR = 10_000


class ConductorMismatch(ValueError):
    pass


class NotInSubfield(ValueError):
    pass


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, ascending, obtained by dividing X^n - 1 by Phi_d for d | n, d < n."""
    if n < 1:
        raise ValueError("conductor must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        den = cyclotomic_poly(d)
        dd = len(den) - 1
        quot = [0] * (len(num) - dd)
        for i in range(len(num) - 1, dd - 1, -1):
            c = num[i]
            if c:
                quot[i - dd] = c
                for j, b in enumerate(den):
                    num[i - dd + j] -= c * b
        assert not any(num[:dd]), "cyclotomic division left a remainder"
        num = quot
    return tuple(num)


@lru_cache(maxsize=None)
def _reduction_terms(m: int) -> tuple[int, tuple[tuple[int, int], ...]]:
    poly = cyclotomic_poly(m)
    deg = len(poly) - 1
    return deg, tuple((j, c) for j, c in enumerate(poly[:-1]) if c)


def _reduce(m: int, vec: list[int]) -> list[int]:
    """Reduce an integer coefficient list (any length) modulo Phi_m."""
    deg, terms = _reduction_terms(m)
    if len(vec) > m:
        folded = [0] * m
        for i, c in enumerate(vec):
            if c:
                folded[i % m] += c
        vec = folded
    else:
        vec = list(vec)
    for i in range(len(vec) - 1, deg - 1, -1):
        c = vec[i]
        if c:
            base = i - deg
            for j, b in terms:
                vec[base + j] -= c * b
    if len(vec) < deg:
        vec.extend([0] * (deg - len(vec)))
    return vec[:deg]


def _check_conductor(m: int) -> None:
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"invalid conductor {m!r}")
    if m > MAX_CONDUCTOR:
        raise ValueError(f"conductor {m} exceeds the configured limit {MAX_CONDUCTOR}")


class CycloElement:
    """An element of Q(zeta_m); immutable."""

    __slots__ = ("m", "_num", "_den")

    def __init__(self, m: int, coeffs: Iterable[Any] = ()):
        _check_conductor(m)
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        den = lcm(*(c.denominator for c in cs)) if cs else 1
        nums = [int(c * den) for c in cs]
        self._set(m, _reduce(m, nums), den)

    def _set(self, m: int, nums: list[int], den: int) -> None:
        g = gcd(den, *nums)
        if den < 0:
            g = -g
        if g not in (0, 1):
            nums = [c // g for c in nums]
            den //= g
        if not any(nums):
            den = 1
        self.m = m
        self._num = tuple(nums)
        self._den = den

    @classmethod
    def _raw(cls, m: int, nums: list[int], den: int) -> "CycloElement":
        obj = cls.__new__(cls)
        obj._set(m, nums, den)
        return obj

    # -- constructors -----------------------------------------------------

    @classmethod
    def zeta(cls, m: int, k: int = 1) -> "CycloElement":
        _check_conductor(m)
        vec = [0] * m
        vec[k % m] = 1
        return cls._raw(m, _reduce(m, vec), 1)

    @classmethod
    def rational(cls, m: int, c: Any) -> "CycloElement":
        return cls(m, [c])

    @classmethod
    def one(cls, m: int) -> "CycloElement":
        return cls.rational(m, 1)

    @classmethod
    def zero(cls, m: int) -> "CycloElement":
        return cls(m, [])

    # -- accessors --------------------------------------------------------

    @property
    def conductor(self) -> int:
        return self.m

    @property
    def degree(self) -> int:
        return len(self._num)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    @property
    def numerators(self) -> tuple[int, ...]:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    def is_zero(self) -> bool:
        return not any(self._num)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise NotInSubfield("element is not rational")
        return Fraction(self._num[0] if self._num else 0, self._den)

    def is_integral_in_power_basis(self) -> bool:
        return self._den == 1

    # -- arithmetic -------------------------------------------------------

    def _lift(self, other: Any) -> "CycloElement":
        if isinstance(other, CycloElement):
            if other.m != self.m:
                raise ConductorMismatch(f"conductors {self.m} and {other.m} differ")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloElement.rational(self.m, other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: Any) -> "CycloElement":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        d1, d2 = self._den, other._den
        return CycloElement._raw(self.m, [a * d2 + b * d1 for a, b in zip(self._num, other._num)], d1 * d2)

    __radd__ = __add__

    def __neg__(self) -> "CycloElement":
        return CycloElement._raw(self.m, [-a for a in self._num], self._den)

    def __sub__(self, other: Any) -> "CycloElement":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> "CycloElement":
        return (-self) + other

    def __mul__(self, other: Any) -> "CycloElement":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._num, other._num
        if other.is_rational():
            c = b[0] if b else 0
            return CycloElement._raw(self.m, [x * c for x in a], self._den * other._den)
        if self.is_rational():
            c = a[0] if a else 0
            return CycloElement._raw(self.m, [x * c for x in b], self._den * other._den)
        out = [0] * (2 * len(a) - 1)
        nz_b = [(j, y) for j, y in enumerate(b) if y]
        for i, x in enumerate(a):
            if x:
                for j, y in nz_b:
                    out[i + j] += x * y
        return CycloElement._raw(self.m, _reduce(self.m, out), self._den * other._den)

    __rmul__ = __mul__

    def inverse(self) -> "CycloElement":
        """Inverse as (product of the other Galois conjugates) / (norm from Q(self))."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return CycloElement.rational(self.m, 1 / self.rational_value())
        others = conjugates(self)[1:]
        cofactor = CycloElement.one(self.m)
        for c in others:
            cofactor = cofactor * c
        norm = self * cofactor
        if not norm.is_rational():
            raise AssertionError("orbit product is not rational")
        return cofactor * (1 / norm.rational_value())

    def __truediv__(self, other: Any) -> "CycloElement":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Any) -> "CycloElement":
        return self.inverse() * other

    def __pow__(self, n: int) -> "CycloElement":
        if not isinstance(n, int):
            raise TypeError("exponent must be an integer")
        base = self
        if n < 0:
            base, n = self.inverse(), -n
        out = CycloElement.one(self.m)
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    # -- comparison / display ---------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CycloElement):
            return self.m == other.m and self._den == other._den and self._num == other._num
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.rational_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.m, self._num, self._den))

    def __repr__(self) -> str:
        return f"CycloElement({self.m}, {self})"

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else (f"z{self.m}" if i == 1 else f"z{self.m}^{i}")
            if mono and abs(c) == 1:
                body = mono
            elif mono:
                body = f"{abs(c)}*{mono}"
            else:
                body = str(abs(c))
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        text = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return text + "".join(f" {s} {b}" for s, b in terms[1:])

    def to_json(self) -> dict:
        return {"m": self.m, "coeffs": [[str(c.numerator), str(c.denominator)] for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "CycloElement":
        m = int(data["m"])
        coeffs = [Fraction(int(n), int(d)) for n, d in data["coeffs"]]
        if len(coeffs) != euler_phi(m):
            raise ValueError(f"expected {euler_phi(m)} coefficients for conductor {m}, got {len(coeffs)}")
        for c, (n, d) in zip(coeffs, data["coeffs"]):
            if c.numerator != int(n) or c.denominator != int(d):
                raise ValueError("coefficients must be gcd-reduced with positive denominators")
        return cls(m, coeffs)


@dataclass(frozen=True)
class Automorphism:
    """zeta_m -> zeta_m^k."""

    m: int
    k: int

    def __post_init__(self) -> None:
        k = self.k % self.m if self.m > 1 else 0
        if gcd(k, self.m) != 1 and self.m > 1:
            raise ValueError(f"exponent {self.k} is not a unit modulo {self.m}")
        object.__setattr__(self, "k", k if self.m > 1 else 1)

    @classmethod
    def identity(cls, m: int) -> "Automorphism":
        return cls(m, 1)

    def __call__(self, a: CycloElement) -> CycloElement:
        return apply(self, a)

    def __mul__(self, other: "Automorphism") -> "Automorphism":
        if other.m != self.m:
            raise ConductorMismatch("automorphisms of different fields")
        return Automorphism(self.m, self.k * other.k)

    def __pow__(self, n: int) -> "Automorphism":
        return Automorphism(self.m, pow(self.k, n, self.m))

    def is_identity(self) -> bool:
        return self.k == 1


def apply(auto: Automorphism, a: CycloElement) -> CycloElement:
    if auto.m != a.m:
        raise ConductorMismatch(f"automorphism of Q(zeta_{auto.m}) applied to element of Q(zeta_{a.m})")
    if auto.k == 1 or a.is_rational():
        return a
    m, k = a.m, auto.k
    vec = [0] * m
    for i, c in enumerate(a._num):
        if c:
            vec[(i * k) % m] += c
    return CycloElement._raw(m, _reduce(m, vec), a._den)


def orbit_product(a: CycloElement, autos: Iterable[Automorphism]) -> CycloElement:
    out = CycloElement.one(a.m)
    for s in autos:
        out = out * apply(s, a)
    return out


class Subspace:
    """A Q-subspace of Q(zeta_m) spanned by given elements, with exact coordinates."""

    def __init__(self, basis: Sequence[CycloElement]):
        if not basis:
            raise ValueError("empty basis")
        self.m = basis[0].m
        if any(b.m != self.m for b in basis):
            raise ConductorMismatch("basis elements from different fields")
        self.basis = tuple(basis)
        k = len(basis)
        rows = [list(b.coeffs) for b in basis]
        trans = [[Fraction(int(i == j)) for j in range(k)] for i in range(k)]
        pivots: list[int] = []
        r = 0
        ncols = len(rows[0])
        for col in range(ncols):
            if r == k:
                break
            piv = next((i for i in range(r, k) if rows[i][col]), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            trans[r], trans[piv] = trans[piv], trans[r]
            inv = 1 / rows[r][col]
            rows[r] = [x * inv for x in rows[r]]
            trans[r] = [x * inv for x in trans[r]]
            for i in range(k):
                if i != r and rows[i][col]:
                    f = rows[i][col]
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
                    trans[i] = [x - f * y for x, y in zip(trans[i], trans[r])]
            pivots.append(col)
            r += 1
        if r != k:
            raise ValueError("basis elements are linearly dependent")
        self._pivots = pivots
        self._rref = rows
        self._trans = trans

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def coordinates(self, a: CycloElement) -> list[Fraction]:
        """Coordinates of ``a`` in ``basis``; raises :class:`NotInSubfield` if ``a`` is outside the span."""
        if a.m != self.m:
            raise ConductorMismatch("element from a different field")
        coeffs = a.coeffs
        c_r = [coeffs[col] for col in self._pivots]
        recon = [Fraction(0)] * len(coeffs)
        for c, row in zip(c_r, self._rref):
            if c:
                for j, y in enumerate(row):
                    if y:
                        recon[j] += c * y
        if recon != list(coeffs):
            raise NotInSubfield("element lies outside the subspace")
        k = len(self.basis)
        return [sum((c_r[i] * self._trans[i][j] for i in range(k)), Fraction(0)) for j in range(k)]

    def contains(self, a: CycloElement) -> bool:
        try:
            self.coordinates(a)
        except NotInSubfield:
            return False
        return True

    def combine(self, coords: Sequence[Any]) -> CycloElement:
        out = CycloElement.zero(self.m)
        for c, b in zip(coords, self.basis):
            if c:
                out = out + b * c
        return out


def _embed(a: CycloElement, n: int) -> CycloElement:
    step = n // a.m
    vec = [0] * n
    for i, c in enumerate(a._num):
        if c:
            vec[i * step] = c
    return CycloElement._raw(n, _reduce(n, vec), a._den)


@lru_cache(maxsize=64)
def _subfield_space(n: int, m: int) -> Subspace:
    return Subspace([CycloElement.zeta(m, j * (m // n)) for j in range(euler_phi(n))])


def coerce(a: CycloElement, target: int) -> CycloElement:
    """Represent ``a`` in Q(zeta_target).

    Embeds when ``a.m | target``, contracts when ``target | a.m`` (raising
    :class:`NotInSubfield` if ``a`` is not in the smaller field), and otherwise
    passes through Q(zeta_gcd).
    """
    _check_conductor(target)
    if target == a.m:
        return a
    if target % a.m == 0:
        return _embed(a, target)
    if a.m % target == 0:
        space = _subfield_space(target, a.m)
        return CycloElement(target, space.coordinates(a))
    g = gcd(a.m, target)
    return coerce(coerce(a, g), target)


def conjugates(a: CycloElement) -> list[CycloElement]:
    """Distinct Galois conjugates of ``a`` over Q, in order of first appearance."""
    seen: dict[CycloElement, None] = {}
    for k in units_mod(a.m):
        seen.setdefault(apply(Automorphism(a.m, k), a), None)
    return list(seen)


def min_poly_over_Q(a: CycloElement) -> RationalPoly:
    """Monic minimal polynomial of ``a`` over Q, as the product of X - c over the Galois orbit."""
    if a.is_rational():
        return RationalPoly([-a.rational_value(), 1])
    m = a.m
    prod: list[CycloElement] = [CycloElement.one(m)]
    for c in conjugates(a):
        nxt = [CycloElement.zero(m)] * (len(prod) + 1)
        for i, coef in enumerate(prod):
            nxt[i + 1] = nxt[i + 1] + coef
            nxt[i] = nxt[i] - coef * c
        prod = nxt
    if not all(c.is_rational() for c in prod):
        raise AssertionError("orbit product has non-rational coefficients")
    return RationalPoly(c.rational_value() for c in prod)
