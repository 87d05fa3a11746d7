"""l-maximal orders of Q[X]/(f) by repeated ring-of-multipliers enlargement.

An order O is stored as a basis matrix B whose rows are elements written in
the power basis 1, a, ..., a^(n-1). Each step replaces O by the multiplier
ring of its l-radical, which is strictly larger unless O is already l-maximal.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["l_maximal_order", "l_valuation_of_field_disc"]


def _mul_power_basis(a: list[Fraction], b: list[Fraction], f: list[int]) -> list[Fraction]:
    n = len(f) - 1
    prod = [Fraction(0)] * (2 * n - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    prod[i + j] += x * y
    for k in range(2 * n - 2, n - 1, -1):
        c = prod[k]
        if c:
            for i in range(n):
                prod[k - n + i] -= c * f[i]
    return prod[:n]


def _inverse(M: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(M)
    A = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for col in range(n):
        piv = next(r for r in range(col, n) if A[r][col])
        A[col], A[piv] = A[piv], A[col]
        inv = 1 / A[col][col]
        A[col] = [x * inv for x in A[col]]
        for r in range(n):
            if r != col and A[r][col]:
                c = A[r][col]
                A[r] = [x - c * y for x, y in zip(A[r], A[col])]
    return [row[n:] for row in A]


def _det(M: list[list[Fraction]]) -> Fraction:
    n = len(M)
    A = [list(r) for r in M]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            A[col], A[piv] = A[piv], A[col]
            det = -det
        det *= A[col][col]
        for r in range(col + 1, n):
            if A[r][col]:
                c = A[r][col] / A[col][col]
                A[r] = [x - c * y for x, y in zip(A[r], A[col])]
    return det


def _vec_mat(v, M) -> list[Fraction]:
    n = len(M[0])
    out = [Fraction(0)] * n
    for i, x in enumerate(v):
        if x:
            row = M[i]
            for j in range(n):
                out[j] += x * row[j]
    return out


def _left_kernel_mod(rows: list[list[int]], l: int) -> list[list[int]]:
    """Basis of {a : sum_i a_i rows[i] = 0 mod l}."""
    n = len(rows)
    width = len(rows[0]) if rows else 0
    # augment with identity to track combinations
    A = [[x % l for x in r] + [int(i == j) for j in range(n)] for i, r in enumerate(rows)]
    r = 0
    for col in range(width):
        piv = next((i for i in range(r, n) if A[i][col]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = pow(A[r][col], -1, l)
        A[r] = [x * inv % l for x in A[r]]
        for i in range(n):
            if i != r and A[i][col]:
                c = A[i][col]
                A[i] = [(x - c * y) % l for x, y in zip(A[i], A[r])]
        r += 1
    return [row[width:] for row in A[r:]]


def _hnf_basis(gens: list[list[int]], n: int) -> list[list[int]]:
    """A basis (n rows) of the full-rank Z-lattice spanned by integer rows."""
    rows = [list(g) for g in gens if any(g)]
    basis = []
    for col in range(n):
        # gcd-reduce the column among remaining rows
        while True:
            nz = [r for r in rows if r[col]]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            for r in nz[1:]:
                q = r[col] // piv[col]
                for k in range(n):
                    r[k] -= q * piv[k]
            rows = [r for r in rows if any(r)]
        nz = [r for r in rows if r[col]]
        if not nz:
            raise ArithmeticError("lattice is not of full rank")
        piv = nz[0]
        basis.append(piv)
        rows = [r for r in rows if r is not piv]
    return basis


def _mult_table(B: list[list[Fraction]], Binv: list[list[Fraction]], f: list[int]) -> list[list[list[int]]]:
    n = len(B)
    T = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            prod = _mul_power_basis(B[i], B[j], f)
            coords = _vec_mat(prod, Binv)
            assert all(c.denominator == 1 for c in coords), "basis does not span an order"
            T[i][j] = T[j][i] = [int(c) for c in coords]
    return T


def _mul_exact(a: list[int], b: list[int], T) -> list[int]:
    n = len(a)
    out = [0] * n
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    xy = x * y
                    row = T[i][j]
                    for k in range(n):
                        out[k] += xy * row[k]
    return out


def _mul_coords(a: list[int], b: list[int], T, l: int) -> list[int]:
    return [c % l for c in _mul_exact(a, b, T)]


def _pow_coords(a: list[int], e: int, one: list[int], T, l: int) -> list[int]:
    out, base = one, a
    while e:
        if e & 1:
            out = _mul_coords(out, base, T, l)
        base = _mul_coords(base, base, T, l)
        e >>= 1
    return out


def _enlarge(B: list[list[Fraction]], f: list[int], l: int) -> tuple[list[list[Fraction]], bool]:
    n = len(B)
    Binv = _inverse(B)
    T = _mult_table(B, Binv, f)
    one = [int(c) for c in _vec_mat([Fraction(1)] + [Fraction(0)] * (n - 1), Binv)]
    # l-radical = kernel of x -> x^(l^j) on O/lO with l^j >= n
    q = l
    while q < n:
        q *= l
    images = [_pow_coords([int(i == k) for k in range(n)], q, one, T, l) for i in range(n)]
    rad = _left_kernel_mod(images, l)
    G = _hnf_basis(rad + [[l * int(i == j) for j in range(n)] for i in range(n)], n)
    Ginv = _inverse([[Fraction(x) for x in row] for row in G])
    # multipliers: x in O with x*g in l*I for every basis vector g of I
    cols: list[list[int]] = [[] for _ in range(n)]
    for i in range(n):
        e_i = [int(k == i) for k in range(n)]
        for g in G:
            prod = _mul_exact(e_i, g, T)
            icoords = _vec_mat([Fraction(c) for c in prod], Ginv)
            assert all(c.denominator == 1 for c in icoords)
            cols[i].extend(int(c) for c in icoords)
    ker = _left_kernel_mod(cols, l)
    U = _hnf_basis(ker + [[l * int(i == j) for j in range(n)] for i in range(n)], n)
    new_in_O = [[Fraction(x, l) for x in row] for row in U]
    if abs(_det(new_in_O)) == 1:
        return B, True
    newB = [_vec_mat(row, B) for row in new_in_O]
    return newB, False


def l_maximal_order(f: list[int], l: int, max_steps: int = 64) -> list[list[Fraction]]:
    """Basis (rows in the power basis) of an order that is maximal at l."""
    n = len(f) - 1
    B = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for _ in range(max_steps):
        B, done = _enlarge(B, f, l)
        if done:
            return B
    raise ArithmeticError("l-maximal order not reached")


def l_valuation_of_field_disc(f: list[int], disc_f: int, l: int) -> int:
    """v_l(d_K) = v_l(disc f) - 2 v_l([O : Z[a]])."""
    B = l_maximal_order(f, l)
    d = _det(B)  # = 1 / index
    index = Fraction(1) / abs(d)
    assert index.denominator == 1
    v_index = 0
    k = index.numerator
    while k % l == 0:
        k //= l
        v_index += 1
    v_disc = 0
    k = abs(disc_f)
    while k % l == 0:
        k //= l
        v_disc += 1
    return v_disc - 2 * v_index
