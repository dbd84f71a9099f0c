"""Exact linear algebra over the rationals.

Rank uses fraction-free (Bareiss) elimination after clearing denominators row
by row, so every intermediate value is a Python int.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm


def _integer_rows(rows):
    out = []
    for row in rows:
        dens = [Fraction(v).denominator for v in row]
        scale = lcm(*dens) if dens else 1
        out.append([int(Fraction(v) * scale) for v in row])
    return out


def rank(rows) -> int:
    """Rank of a rational matrix given as a list of rows."""
    m = _integer_rows(rows)
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][c]
        for i in range(r + 1, nrows):
            a = m[i][c]
            row_i, row_r = m[i], m[r]
            for j in range(c + 1, ncols):
                row_i[j] = (p * row_i[j] - a * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
        if r == nrows:
            break
    return r


def rref(rows):
    """Reduced row echelon form over Fraction; returns (matrix, pivot columns)."""
    m = [[Fraction(v) for v in row] for row in rows]
    pivots = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def nullspace(rows, ncols: int | None = None):
    """Basis of ``{v : A v = 0}`` as a list of integer vectors."""
    if ncols is None:
        ncols = len(rows[0])
    if not rows:
        return [[int(i == j) for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(_integer_rows([v])[0])
    return basis


def matmul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def identity(n: int):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matpow(a, k: int):
    out = identity(len(a))
    base = a
    while k:
        if k & 1:
            out = matmul(out, base)
        k >>= 1
        if k:
            base = matmul(base, base)
    return out


def transpose(a):
    return [list(col) for col in zip(*a)]
