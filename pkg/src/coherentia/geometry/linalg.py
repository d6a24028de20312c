"""Exact linear algebra over the rationals (lists of Fractions)."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

Vector = list
Matrix = list


def as_fraction_matrix(rows) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def rref(rows: Matrix, ncols: int | None = None) -> tuple[Matrix, list]:
    """Reduced row echelon form and pivot columns; zero rows are dropped.

    Only the first ``ncols`` columns are eligible as pivots (the rest, e.g. an
    augmented right-hand side, are carried along).
    """
    m = [list(map(Fraction, r)) for r in rows]
    if not m:
        return [], []
    width = len(m[0]) if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(width):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Matrix) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Matrix, n: int) -> Matrix:
    """Basis of {x : rows·x = 0} in R^n, returned in reduced echelon form."""
    if not rows:
        basis = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    else:
        r, pivots = rref(rows, n)
        free = [j for j in range(n) if j not in pivots]
        basis = []
        for f in free:
            v = [Fraction(0)] * n
            v[f] = Fraction(1)
            for row, p in zip(r, pivots):
                v[p] = -row[f]
            basis.append(v)
    if not basis:
        return []
    return rref(basis)[0]


def solve(rows: Matrix, rhs: Sequence) -> Vector:
    """Unique solution of a square nonsingular system."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, len(rows[0]))
    if len(pivots) != len(rows[0]):
        raise ValueError("singular system")
    return [row[-1] for row in red]


def inverse(rows: Matrix) -> Matrix:
    n = len(rows)
    aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    red, pivots = rref(aug, n)
    if len(pivots) != n:
        raise ValueError("singular matrix")
    return [row[n:] for row in red]


def primitive(vec: Sequence, offset: Fraction | None = None):
    """Scale by a positive rational so ``vec`` becomes a primitive integer vector.

    Returns the scaled vector, or ``(vector, offset)`` when an offset is given
    (the offset is scaled by the same factor and may stay fractional).
    A zero vector is returned unchanged.
    """
    vec = [Fraction(x) for x in vec]
    nz = [x for x in vec if x != 0]
    if not nz:
        return (vec, offset) if offset is not None else vec
    denom = lcm(*(x.denominator for x in nz))
    ints = [int(x * denom) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    scale = Fraction(denom, g)
    out = [Fraction(x // g) for x in ints]
    if offset is not None:
        return out, Fraction(offset) * scale
    return out


def first_nonzero_positive(vec, offset=None):
    """Flip sign so the first nonzero entry is positive (equalities only)."""
    lead = next((x for x in vec if x != 0), 0)
    if lead < 0:
        vec = [-x for x in vec]
        if offset is not None:
            offset = -offset
    return (vec, offset) if offset is not None else vec
