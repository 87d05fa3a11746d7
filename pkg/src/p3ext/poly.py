"""Dense univariate polynomials with exact rational coefficients.

Coefficients are stored in ascending order: ``coeffs[i]`` multiplies ``X**i``.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Any, Iterable, Sequence

from .ntheory import factor_integer

__all__ = ["RationalPoly", "bareiss_det", "format_factored"]


def _frac(c: Any) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class RationalPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Any] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def x(cls) -> "RationalPoly":
        return cls([0, 1])

    @classmethod
    def constant(cls, c: Any) -> "RationalPoly":
        return cls([c])

    @classmethod
    def from_roots_product(cls, factors: Sequence["RationalPoly"]) -> "RationalPoly":
        out = cls([1])
        for f in factors:
            out = out * f
        return out

    # -- basic protocol ---------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RationalPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == RationalPoly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"RationalPoly({self.pretty()})"

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other: Any) -> "RationalPoly":
        if isinstance(other, RationalPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalPoly([other])
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: Any) -> "RationalPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return RationalPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "RationalPoly":
        return RationalPoly(-c for c in self.coeffs)

    def __sub__(self, other: Any) -> "RationalPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> "RationalPoly":
        return (-self) + other

    def __mul__(self, other: Any) -> "RationalPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RationalPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RationalPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RationalPoly":
        if n < 0:
            raise ValueError("negative polynomial power")
        out, base = RationalPoly([1]), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divmod(self, other: "RationalPoly") -> tuple["RationalPoly", "RationalPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.leading
        quot = [Fraction(0)] * max(0, len(rem) - dq)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] / lead
            if c:
                quot[i - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[i - dq + j] -= c * b
        return RationalPoly(quot), RationalPoly(rem[:dq])

    def __floordiv__(self, other: "RationalPoly") -> "RationalPoly":
        return self.divmod(other)[0]

    def __mod__(self, other: "RationalPoly") -> "RationalPoly":
        return self.divmod(other)[1]

    def monic(self) -> "RationalPoly":
        lead = self.leading
        return RationalPoly(c / lead for c in self.coeffs)

    def gcd(self, other: "RationalPoly") -> "RationalPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def lcm(self, other: "RationalPoly") -> "RationalPoly":
        return (self * other // self.gcd(other)).monic()

    def derivative(self) -> "RationalPoly":
        return RationalPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def compose(self, inner: "RationalPoly") -> "RationalPoly":
        """``self(inner(X))``."""
        out = RationalPoly()
        for c in reversed(self.coeffs):
            out = out * inner + c
        return out

    def __call__(self, value: Any) -> Any:
        """Horner evaluation; works for any ring element supporting ``*`` and ``+``."""
        if not self.coeffs:
            return value * 0
        acc = value * 0 + self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * value + c
        return acc

    def is_squarefree(self) -> bool:
        return self.gcd(self.derivative()).degree == 0

    # -- integral models --------------------------------------------------

    def integral_scaling(self) -> int:
        """Smallest ``c > 0`` with ``c**n * f(X/c)`` integral (for monic ``f``)."""
        if not self.is_monic():
            raise ValueError("scaling is defined for monic polynomials")
        n = self.degree
        den = lcm(*(c.denominator for c in self.coeffs)) if self.coeffs else 1
        scale = 1
        for q in factor_integer(den) if den > 1 else {}:
            need = 0
            for k, c in enumerate(self.coeffs[:-1]):
                if c:
                    v = 0
                    d = c.denominator
                    while d % q == 0:
                        d //= q
                        v += 1
                    need = max(need, -(-v // (n - k)))
            scale *= q**need
        return scale

    def scaled(self, c: int) -> "RationalPoly":
        """``c**n * f(X/c)``: roots multiplied by ``c``."""
        n = self.degree
        return RationalPoly(a * Fraction(c) ** (n - k) for k, a in enumerate(self.coeffs))

    def integer_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise ValueError("polynomial has non-integral coefficients")
        return [int(c) for c in self.coeffs]

    # -- display / serialization ------------------------------------------

    def pretty(self, var: str = "X") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if mono and a == 1:
                body = mono
            else:
                body = str(a) + (f"*{mono}" if mono else "")
            parts.append((sign, body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def factored_display(self, var: str = "X") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            a = abs(c)
            if a == 1 and mono:
                body = mono
            else:
                body = format_factored(a)
                if mono:
                    body = (f"({body})" if a.denominator != 1 else body) + f"*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self) -> dict:
        return {
            "coeffs": [[str(c.numerator), str(c.denominator)] for c in self.coeffs],
            "factored_display": self.factored_display(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "RationalPoly":
        return cls(Fraction(int(n), int(d)) for n, d in data["coeffs"])


def format_factored(x: Fraction) -> str:
    """``3^4*13`` or ``-3*37/7^3`` style rendering of a rational."""

    def fmt(n: int) -> str:
        items = sorted(factor_integer(n).items()) if n > 1 else []
        return "*".join(str(q) if k == 1 else f"{q}^{k}" for q, k in items) or "1"

    x = Fraction(x)
    if x < 0:
        return "-" + format_factored(-x)
    if x == 0:
        return "0"
    num = fmt(x.numerator)
    if x.denominator == 1:
        return num
    den = fmt(x.denominator)
    return f"{num}/({den})" if "*" in den else f"{num}/{den}"


def bareiss_det(matrix: list[list[int]]) -> int:
    """Fraction-free determinant of a square integer matrix."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]
