"""Two-phase tableau simplex over the rationals with Bland's rule.

No tolerances anywhere: every pivot is exact, so a reported optimum or
infeasibility certificate can be re-checked by direct arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

__all__ = ["LPResult", "solve_standard", "solve_lp"]

ZERO = Fraction(0)


@dataclass
class LPResult:
    status: str  # "optimal", "infeasible" or "unbounded"
    x: list | None = None
    value: Fraction | None = None
    farkas: list | None = None  # y with y·A >= 0 columnwise and y·b < 0

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"


class _Tableau:
    def __init__(self, rows, basis, obj):
        self.rows = rows
        self.basis = basis
        self.obj = obj

    def pivot(self, r: int, c: int) -> None:
        row = self.rows[r]
        inv = 1 / row[c]
        row = [x * inv for x in row]
        self.rows[r] = row
        nz = [(j, x) for j, x in enumerate(row) if x != 0]
        for i, other in enumerate(self.rows):
            f = other[c]
            if i != r and f != 0:
                for j, x in nz:
                    other[j] -= f * x
        f = self.obj[c]
        if f != 0:
            for j, x in nz:
                self.obj[j] -= f * x
        self.basis[r] = c

    def run(self, allowed: int) -> str:
        """Minimize; columns >= ``allowed`` may not enter the basis."""
        while True:
            enter = next((j for j in range(allowed) if self.obj[j] < 0), None)
            if enter is None:
                return "optimal"
            best = None
            for i, row in enumerate(self.rows):
                a = row[enter]
                if a > 0:
                    key = (row[-1] / a, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return "unbounded"
            self.pivot(best[1], enter)


def solve_standard(c: Sequence, A: Sequence[Sequence], b: Sequence) -> LPResult:
    """Minimize c·x subject to A x = b, x >= 0.

    On infeasibility the result carries a Farkas vector y (one entry per row
    of A) with y·A_j >= 0 for every column j and y·b < 0.
    """
    m = len(A)
    n = len(c)
    signs = [(-1 if Fraction(bi) < 0 else 1) for bi in b]
    rows = []
    for i in range(m):
        s = signs[i]
        row = [s * Fraction(x) for x in A[i]]
        row += [Fraction(int(k == i)) for k in range(m)]
        row.append(s * Fraction(b[i]))
        rows.append(row)
    obj = [-sum((rows[i][j] for i in range(m)), ZERO) for j in range(n)] + [ZERO] * m
    obj.append(-sum((rows[i][-1] for i in range(m)), ZERO))
    t = _Tableau(rows, list(range(n, n + m)), obj)
    t.run(n + m)

    if -t.obj[-1] > 0:
        y = [1 - t.obj[n + i] for i in range(m)]
        return LPResult("infeasible", farkas=[-y[i] * signs[i] for i in range(m)])

    keep = []
    for i in range(m):
        if t.basis[i] >= n:
            j = next((j for j in range(n) if t.rows[i][j] != 0), None)
            if j is None:
                continue  # redundant row
            t.pivot(i, j)
        keep.append(i)
    t.rows = [t.rows[i] for i in keep]
    t.basis = [t.basis[i] for i in keep]

    obj = [Fraction(x) for x in c] + [ZERO] * m + [ZERO]
    for row, bcol in zip(t.rows, t.basis):
        cb = obj[bcol]
        if cb != 0:
            obj = [o - cb * x for o, x in zip(obj, row)]
    t.obj = obj
    if t.run(n) == "unbounded":
        return LPResult("unbounded")
    x = [ZERO] * n
    for row, bcol in zip(t.rows, t.basis):
        x[bcol] = row[-1]
    return LPResult("optimal", x=x, value=sum((Fraction(ci) * xi for ci, xi in zip(c, x)), ZERO))


def solve_lp(
    c: Sequence,
    A_ub: Sequence[Sequence] = (),
    b_ub: Sequence = (),
    A_eq: Sequence[Sequence] = (),
    b_eq: Sequence = (),
    maximize: bool = False,
    nonnegative: bool = False,
) -> LPResult:
    """Optimize c·x subject to A_ub x <= b_ub and A_eq x = b_eq.

    Variables are free unless ``nonnegative``; free variables are split into
    differences of nonnegative ones.
    """
    n = len(c)
    sign = -1 if maximize else 1
    width = n if nonnegative else 2 * n

    def expand(row):
        row = [Fraction(x) for x in row]
        return row if nonnegative else row + [-x for x in row]

    k = len(A_ub)
    A, b = [], []
    for i, (row, bi) in enumerate(zip(A_ub, b_ub)):
        A.append(expand(row) + [Fraction(int(s == i)) for s in range(k)])
        b.append(Fraction(bi))
    for row, bi in zip(A_eq, b_eq):
        A.append(expand(row) + [ZERO] * k)
        b.append(Fraction(bi))
    cost = expand([sign * Fraction(x) for x in c]) + [ZERO] * k
    if not A:
        if any(x != 0 for x in cost):
            return LPResult("unbounded")
        return LPResult("optimal", x=[ZERO] * n, value=ZERO)

    res = solve_standard(cost, A, b)
    if not res.optimal:
        return res
    raw = res.x[:width]
    x = raw if nonnegative else [raw[j] - raw[n + j] for j in range(n)]
    return LPResult("optimal", x=x, value=sum((Fraction(ci) * xi for ci, xi in zip(c, x)), ZERO))
