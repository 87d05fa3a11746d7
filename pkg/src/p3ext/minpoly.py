"""Irr(alpha; Q) from the multiplication operator on M = L[t]/(t^p - omega).

M has Q-basis {L_basis[i] * t^j}, dimension p^2 (p-1). The minimal
polynomial of multiplication by alpha is Irr(alpha) whenever M is a field,
so it is found by a Krylov iteration on the vector 1. The p = 3, e = -1
shortcut through omega + 1/omega gives an independent second route.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

import mpmath

from .construct import ConstructionResult
from .cyclo import CycloElement, min_poly_over_Q
from .ntheory import units_mod
from .poly import RationalPoly

__all__ = [
    "MinpolyError",
    "RadicalAlgebra",
    "multiplication_matrix",
    "krylov_minpoly",
    "irr_alpha_matrix",
    "irr_shortcut_p3",
    "matrix_horner_is_zero",
    "numeric_crosscheck",
]


class MinpolyError(ArithmeticError):
    pass


class RadicalAlgebra:
    """Arithmetic in L[t]/(t^p - omega); elements are tuples of p elements of L."""

    def __init__(self, res: ConstructionResult):
        self.res = res
        self.tower = res.tower
        self.p = res.p
        self.omega = res.omega
        m = self.tower.m
        self._zero = CycloElement.zero(m)

    def element(self, terms: Sequence[tuple[CycloElement, int]]) -> tuple[CycloElement, ...]:
        out = [self._zero] * self.p
        for c, n in terms:
            c, r = self.res.reduce_power(c, n)
            out[r] = out[r] + c
        return tuple(out)

    def one(self) -> tuple[CycloElement, ...]:
        return self.element([(CycloElement.one(self.tower.m), 0)])

    def alpha(self) -> tuple[CycloElement, ...]:
        return self.element(self.res.alpha_terms)

    def mul(self, a, b) -> tuple[CycloElement, ...]:
        p = self.p
        out = [self._zero] * p
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if not bj:
                    continue
                prod = ai * bj
                if i + j >= p:
                    out[i + j - p] = out[i + j - p] + prod * self.omega
                else:
                    out[i + j] = out[i + j] + prod
        return tuple(out)

    def add(self, a, b) -> tuple[CycloElement, ...]:
        return tuple(x + y for x, y in zip(a, b))

    def scale(self, a, c: Fraction) -> tuple[CycloElement, ...]:
        return tuple(x * c for x in a)

    def coordinates(self, a) -> list[Fraction]:
        out: list[Fraction] = []
        for part in a:
            out.extend(self.tower.L_space.coordinates(part))
        return out

    def basis(self) -> list[tuple[CycloElement, ...]]:
        out = []
        for j in range(self.p):
            for bvec in self.tower.L_basis:
                v = [self._zero] * self.p
                v[j] = bvec
                out.append(tuple(v))
        return out

    def evaluate(self, f: RationalPoly, a) -> tuple[CycloElement, ...]:
        acc = tuple(self._zero for _ in range(self.p))
        one = self.one()
        for c in reversed(f.coeffs):
            acc = self.add(self.mul(acc, a), self.scale(one, c))
        return acc


def multiplication_matrix(res: ConstructionResult) -> list[list[Fraction]]:
    """Matrix (columns = images of basis vectors) of multiplication by alpha."""
    alg = RadicalAlgebra(res)
    alpha = alg.alpha()
    cols = [alg.coordinates(alg.mul(alpha, bvec)) for bvec in alg.basis()]
    n = len(cols)
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def _matvec(A: list[list[Fraction]], v: list[Fraction]) -> list[Fraction]:
    nz = [(j, x) for j, x in enumerate(v) if x]
    return [sum((row[j] * x for j, x in nz), Fraction(0)) for row in A]


def krylov_minpoly(A: list[list[Fraction]], start: Optional[list[Fraction]] = None) -> RationalPoly:
    """Minimal polynomial of A relative to one vector (e_0 by default)."""
    n = len(A)
    v = start if start is not None else [Fraction(int(i == 0)) for i in range(n)]
    rows: list[tuple[int, list[Fraction], list[Fraction]]] = []  # pivot, vector, poly coeffs
    k = 0
    while True:
        vec = list(v)
        poly = [Fraction(0)] * k + [Fraction(1)]
        for piv, rv, rp in rows:
            c = vec[piv]
            if c:
                for i in range(n):
                    if rv[i]:
                        vec[i] -= c * rv[i]
                for i, x in enumerate(rp):
                    poly[i] -= c * x
        piv = next((i for i, x in enumerate(vec) if x), None)
        if piv is None:
            return RationalPoly(poly)
        inv = 1 / vec[piv]
        rows.append((piv, [x * inv for x in vec], [x * inv for x in poly]))
        v = _matvec(A, v)
        k += 1
        if k > n:
            raise MinpolyError("Krylov iteration did not terminate")


def matrix_horner_is_zero(A: list[list[Fraction]], f: RationalPoly) -> bool:
    """Evaluate f(A) literally and test for the zero matrix."""
    n = len(A)
    acc = [[Fraction(0)] * n for _ in range(n)]
    for c in reversed(f.coeffs):
        prod = [[sum((acc[i][k] * A[k][j] for k in range(n) if acc[i][k]), Fraction(0)) for j in range(n)] for i in range(n)]
        for i in range(n):
            prod[i][i] += c
        acc = prod
    return all(x == 0 for row in acc for x in row)


def irr_alpha_matrix(res: ConstructionResult, certify_matrix: Optional[bool] = None) -> RationalPoly:
    """Irr(alpha; Q) of degree p^2, certified by f(alpha) = 0 in M.

    The literal matrix evaluation f(A) = 0 is also run by default for p = 3.
    """
    p = res.p
    A = multiplication_matrix(res)
    f = krylov_minpoly(A)
    if f.degree != p * p:
        raise MinpolyError(
            f"minimal polynomial has degree {f.degree}, expected {p * p}; "
            "omega or b is probably a p-th power in L"
        )
    alg = RadicalAlgebra(res)
    if any(alg.evaluate(f, alg.alpha())):
        raise MinpolyError("f(alpha) != 0 in L[t]/(t^p - omega)")
    if certify_matrix is None:
        certify_matrix = p == 3
    if certify_matrix and not matrix_horner_is_zero(A, f):
        raise MinpolyError("f(A) is not the zero matrix")
    return f


X3_MINUS_3X = RationalPoly([0, -3, 0, 1])


def irr_shortcut_p3(res: ConstructionResult) -> RationalPoly:
    """p(X^3 - 3X) with p the minimal polynomial of omega + 1/omega."""
    t = res.tower
    if t.p != 3 or t.e != -1:
        raise MinpolyError("the shortcut needs p = 3 and e = -1")
    u = res.omega + res.omega.inverse()
    g = min_poly_over_Q(u)
    if g.degree != 3:
        raise MinpolyError(f"omega + 1/omega has degree {g.degree}, expected 3")
    return g.compose(X3_MINUS_3X)


# -- floating-point sanity check ---------------------------------------------


def _embed(a: CycloElement, k: int) -> mpmath.mpc:
    m = a.m
    z = mpmath.expjpi(mpmath.mpf(2 * k) / m)
    acc = mpmath.mpc(0)
    for c in reversed(a.coeffs):
        acc = acc * z + mpmath.mpf(c.numerator) / c.denominator
    return acc


def numeric_crosscheck(res: ConstructionResult, f: RationalPoly, bits: int = 200, tol_bits: int = 100) -> bool:
    """prod (X - alpha_i) over all p^2 (p-1) embeddings of M must equal f^(p-1)."""
    tower = res.tower
    p = tower.p
    H = tower.H_L
    reps: list[int] = []
    seen: set[int] = set()
    for k in units_mod(tower.m):
        if k in seen:
            continue
        reps.append(k)
        seen.update(k * h % tower.m for h in H)
    with mpmath.workprec(bits):
        roots = []
        for k in reps:
            w = _embed(res.omega, k)
            t0 = mpmath.root(w, p)
            lams = [(_embed(c, k), n) for c, n in res.alpha_terms]
            for j in range(p):
                t = t0 * mpmath.expjpi(mpmath.mpf(2 * j) / p)
                roots.append(sum(lam * t**n for lam, n in lams))
        coeffs = [mpmath.mpc(1)]
        for r in roots:
            coeffs = [mpmath.mpc(0)] + coeffs
            for i in range(len(coeffs) - 1):
                coeffs[i] -= r * coeffs[i + 1]
        target = f ** (p - 1)
        big = max(abs(c) for c in target.coeffs)
        scale = max(mpmath.mpf(1), mpmath.mpf(big.numerator) / big.denominator)
        err = max(abs(coeffs[i] - mpmath.mpf(target[i].numerator) / target[i].denominator) for i in range(len(coeffs)))
        return len(coeffs) - 1 == target.degree and err / scale < mpmath.mpf(2) ** (-tol_bits)
