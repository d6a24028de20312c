"""Polyhedra given by rational equalities and inequalities, for LP queries."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .linalg import dot, primitive, rref
from .lp import solve_lp

__all__ = ["Polyhedron"]


class Polyhedron:
    """{x : a·x = c for equalities, a·x >= c for inequalities} in R^n.

    Equalities are eliminated up front (x = x0 + N y over the free
    coordinates) and duplicate inequalities collapsed, so each LP runs in the
    dimension of the affine hull of the constraint system.
    """

    def __init__(self, n: int, equalities: Sequence = (), inequalities: Sequence = ()):
        self.n = n
        self.empty = False
        eqs = [[Fraction(x) for x in a] + [Fraction(c)] for a, c in equalities]
        red, pivots = rref(eqs, n) if eqs else ([], [])
        if eqs and n in rref(eqs, n + 1)[1]:
            # a pivot in the right-hand side column means 0 = c with c != 0
            self.empty = True
        self.free = [j for j in range(n) if j not in pivots]
        self.x0 = [Fraction(0)] * n
        # columns of N: one per free coordinate
        self.N = [[Fraction(0)] * len(self.free) for _ in range(n)]
        for k, j in enumerate(self.free):
            self.N[j][k] = Fraction(1)
        for row, p in zip(red, pivots):
            self.x0[p] = row[n]
            for k, j in enumerate(self.free):
                self.N[p][k] = -row[j]

        seen = set()
        self.rows = []  # reduced (g, h): g·y >= h
        for a, c in inequalities:
            a = [Fraction(x) for x in a]
            g = [dot(a, [self.N[i][k] for i in range(n)]) for k in range(len(self.free))]
            h = Fraction(c) - dot(a, self.x0)
            if all(x == 0 for x in g):
                if h > 0:
                    self.empty = True
                continue
            g, h = primitive(g, h)
            key = (tuple(g), h)
            if key not in seen:
                seen.add(key)
                self.rows.append((g, h))

    def lift(self, y: Sequence) -> list:
        return [self.x0[i] + dot(self.N[i], y) for i in range(self.n)]

    def minimize(self, objective: Sequence):
        """``(value, argmin)``; ``None`` when empty, ``(None, None)`` if unbounded."""
        if self.empty:
            return None
        objective = [Fraction(x) for x in objective]
        k = len(self.free)
        cy = [dot(objective, [self.N[i][j] for i in range(self.n)]) for j in range(k)]
        offset = dot(objective, self.x0)
        if k == 0:
            return offset, list(self.x0)
        res = solve_lp(cy, A_ub=[[-x for x in g] for g, _ in self.rows], b_ub=[-h for _, h in self.rows])
        if res.status == "infeasible":
            self.empty = True
            return None
        if res.status == "unbounded":
            return None, None
        return offset + res.value, self.lift(res.x)

    def maximize(self, objective: Sequence):
        out = self.minimize([-Fraction(x) for x in objective])
        if out is None or out[0] is None:
            return out
        return -out[0], out[1]
