"""Exact integer and rational linear algebra.

Matrices are plain lists of rows holding Python ints (arbitrary precision) or
``fractions.Fraction``.  Nothing here touches floating point except as a
starting guess that is always corrected by an exact test.
"""

from __future__ import annotations

from fractions import Fraction
import math

import numpy as np
from typing import Sequence

IntMatrix = list[list[int]]


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(rows: int, cols: int) -> IntMatrix:
    return [[0] * cols for _ in range(rows)]


def as_matrix(m) -> IntMatrix:
    """Copy any nested sequence (including numpy arrays) into a list of int rows."""
    return [[int(x) for x in row] for row in m]


def transpose(m: Sequence[Sequence]) -> list[list]:
    if not m:
        return []
    return [list(col) for col in zip(*m)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a: Sequence[Sequence], v: Sequence) -> list:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def kron(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    """Kronecker product; index (i, k) of ``a ⊗ b`` is ``i * len(b) + k``."""
    rb, cb = len(b), len(b[0])
    out = zeros(len(a) * rb, len(a[0]) * cb)
    for i, row in enumerate(a):
        for j, x in enumerate(row):
            if x == 0:
                continue
            for k in range(rb):
                for m in range(cb):
                    out[i * rb + k][j * cb + m] = x * b[k][m]
    return out


def det(m: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (Bareiss, fraction free)."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rational_inverse(m: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        a[c], a[p] = a[p], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


def solve_rational(m: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """One solution of ``m x = b`` over Q, or None if the system is inconsistent.

    Free variables are set to zero.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(m, b)]
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    if any(a[i][cols] != 0 for i in range(r, rows)):
        return None
    x = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x[c] = a[i][cols]
    return x


def rational_rank(m: Sequence[Sequence]) -> int:
    if not m:
        return 0
    a = [[Fraction(x) for x in row] for row in m]
    rows, cols = len(a), len(a[0])
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        for i in range(r + 1, rows):
            if a[i][c] != 0:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


# ---------------------------------------------------------------------------
# Smith and Hermite normal forms


def smith_normal_form(m: Sequence[Sequence[int]]):
    """Smith normal form of an integer matrix.

    Returns ``(divisors, U, V)`` with ``U @ m @ V == diag(divisors)`` (padded
    with zeros to the shape of ``m``), ``U`` and ``V`` unimodular, and the
    nonnegative divisors satisfying ``d[0] | d[1] | ...``.  The list has
    ``min(rows, cols)`` entries.
    """
    a = as_matrix(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = identity(rows)
    v = identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, f):
        # row_dst += f * row_src
        a[dst] = [x + f * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, f):
        for row in a:
            row[dst] += f * row[src]
        for row in v:
            row[dst] += f * row[src]

    for t in range(min(rows, cols)):
        while True:
            # bring the smallest nonzero entry of the trailing block to (t, t)
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    x = a[i][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                return [a[i][i] for i in range(min(rows, cols))], u, v
            _, i, j = best
            swap_rows(t, i)
            swap_cols(t, j)
            p = a[t][t]
            done = True
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    add_row(i, t, -q)
                if a[i][t]:
                    done = False
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    add_col(j, t, -q)
                if a[t][j]:
                    done = False
            if not done:
                continue
            # pivot must divide the whole trailing block
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if a[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return [a[i][i] for i in range(min(rows, cols))], u, v


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> IntMatrix:
    """Row-style Hermite normal form; returns only the nonzero rows.

    The result is a basis (as rows) of the Z-span of the input rows, upper
    triangular with positive pivots and reduced entries above each pivot.
    """
    a = [list(r) for r in as_matrix(rows) if any(r)]
    if not a:
        return []
    ncols = len(a[0])
    out: IntMatrix = []
    r = 0
    for c in range(ncols):
        # Euclid on column c among rows r..
        while True:
            nz = [i for i in range(r, len(a)) if a[i][c]]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(a[i][c]))
            a[r], a[i0] = a[i0], a[r]
            if len(nz) == 1:
                break
            for i in range(r + 1, len(a)):
                q = a[i][c] // a[r][c]
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
        if r < len(a) and a[r][c]:
            if a[r][c] < 0:
                a[r] = [-x for x in a[r]]
            for i in range(r):
                q = a[i][c] // a[r][c]
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
            r += 1
            if r == len(a):
                break
    out = [row for row in a[:r]]
    return out


def integer_kernel(m: Sequence[Sequence[int]]) -> IntMatrix:
    """Saturated Z-basis (as rows) of ``{x in Z^cols : m x = 0}``."""
    a = as_matrix(m)
    cols = len(a[0])
    d, _, v = smith_normal_form(a)
    nonzero = sum(1 for x in d if x)
    return hermite_normal_form([[v[i][j] for i in range(cols)] for j in range(nonzero, cols)])


def solve_integer(m: Sequence[Sequence[int]], b: Sequence[int]) -> list[int] | None:
    """An integer solution of ``m x = b`` or None when none exists."""
    a = as_matrix(m)
    rows = len(a)
    cols = len(a[0])
    d, u, v = smith_normal_form(a)
    c = matvec(u, b)
    y = [0] * cols
    for i in range(rows):
        di = d[i] if i < len(d) else 0
        if di == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % di:
                return None
            y[i] = c[i] // di
    return matvec(v, y)


# ---------------------------------------------------------------------------
# Linear algebra over a prime field


def rank_mod_p(m: Sequence[Sequence[int]], p: int) -> int:
    return len(m[0]) - len(kernel_mod_p(m, p)) if m else 0


def kernel_mod_p(m: Sequence[Sequence[int]], p: int) -> IntMatrix:
    """Basis (as rows, entries in 0..p-1) of the right null space of m over F_p."""
    a = [[x % p for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [(x * inv) % p for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        x = [0] * cols
        x[f] = 1
        for i, c in enumerate(pivots):
            x[c] = (-a[i][f]) % p
        basis.append(x)
    return basis


def solve_mod_p(m: Sequence[Sequence[int]], b: Sequence[int], p: int) -> list[int] | None:
    a = [[x % p for x in row] + [y % p] for row, y in zip(m, b)]
    rows = len(a)
    cols = len(a[0]) - 1
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [(x * inv) % p for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    if any(a[i][cols] for i in range(r, rows)):
        return None
    x = [0] * cols
    for i, c in enumerate(pivots):
        x[c] = a[i][cols]
    return x


# ---------------------------------------------------------------------------
# Basis reduction and short vectors (internal helpers for lattices)


def lll_reduce(gram: Sequence[Sequence[int]], delta: Fraction = Fraction(3, 4)):
    """Exact LLL on a Gram matrix.

    Returns the transformation ``T`` (rows = new basis vectors in the old
    coordinates).  The reduced Gram is ``T G T^t``.
    """
    n = len(gram)
    g = [[Fraction(x) for x in row] for row in gram]
    t = identity(n)

    def ip(i, j):
        return g[i][j]

    def gso():
        mu = [[Fraction(0)] * n for _ in range(n)]
        bstar = [Fraction(0)] * n
        for i in range(n):
            for j in range(i):
                s = ip(i, j) - sum(mu[j][k] * mu[i][k] * bstar[k] for k in range(j))
                mu[i][j] = s / bstar[j]
            bstar[i] = ip(i, i) - sum(mu[i][k] ** 2 * bstar[k] for k in range(i))
        return mu, bstar

    def add(i, j, q):
        # b_i -= q b_j
        t[i] = [x - q * y for x, y in zip(t[i], t[j])]
        for k in range(n):
            g[i][k] -= q * g[j][k]
        for k in range(n):
            g[k][i] -= q * g[k][j]

    def swap(i, j):
        t[i], t[j] = t[j], t[i]
        g[i], g[j] = g[j], g[i]
        for row in g:
            row[i], row[j] = row[j], row[i]

    k = 1
    mu, bstar = gso()
    while k < n:
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                add(k, j, q)
                mu, bstar = gso()
        if bstar[k] >= (delta - mu[k][k - 1] ** 2) * bstar[k - 1]:
            k += 1
        else:
            swap(k, k - 1)
            mu, bstar = gso()
            k = max(k - 1, 1)
    return t


def _ldl(gram: Sequence[Sequence[int]]):
    """``G = sum_i q_i (x_i + sum_{j>i} m_ij x_j)^2`` with exact rationals."""
    n = len(gram)
    a = [[Fraction(x) for x in row] for row in gram]
    q = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            q[i][j] = a[i][j]
    for i in range(n):
        if q[i][i] <= 0:
            raise ValueError("Gram matrix is not positive definite")
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= q[k][i] * q[i][l]
    diag = [q[i][i] for i in range(n)]
    mu = [[q[i][j] if j > i else Fraction(0) for j in range(n)] for i in range(n)]
    return diag, mu


def fincke_pohst(gram: Sequence[Sequence[int]], bound: int) -> list[tuple[int, ...]]:
    """All integer coordinate vectors x with x^t G x <= bound (zero included).

    The search tree comes from an exact LDL decomposition.  Branch ranges are
    walked in floating point with a generous slack, and every leaf is then
    accepted or rejected by its exact integer norm, so the output is exact.
    """
    n = len(gram)
    diag_q, mu_q = _ldl(gram)
    diag = [float(d) for d in diag_q]
    mu = [[float(x) for x in row] for row in mu_q]
    slack = 1e-7 * (1 + abs(bound))
    out: list[tuple[int, ...]] = []
    x = [0] * n

    def rec(i: int, remaining: float):
        c = -sum(mu[i][j] * x[j] for j in range(i + 1, n))
        r = (max(remaining, 0.0) / diag[i]) ** 0.5
        lo = math.ceil(c - r - 1e-9)
        hi = math.floor(c + r + 1e-9)
        for xi in range(lo, hi + 1):
            rest = remaining - diag[i] * (xi - c) ** 2
            if rest < -slack:
                continue
            x[i] = xi
            if i == 0:
                out.append(tuple(x))
            else:
                rec(i - 1, rest)
        x[i] = 0

    rec(n - 1, bound + slack)
    if not out:
        return out
    # coordinates and Gram entries are small here, so int64 is exact
    xs = np.array(out, dtype=np.int64)
    norms = np.einsum("ij,jk,ik->i", xs, np.array(gram, dtype=np.int64), xs)
    return [v for v, nv in zip(out, norms.tolist()) if nv <= bound]
