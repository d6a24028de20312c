"""Convex hulls of finitely many rational points.

``facet_enumeration`` converts a V-representation into a canonical
H-representation: affine-hull equalities plus facet inequalities.  The facets
are computed by the double description method in the coordinates of the
affine hull, where the polytope is full-dimensional, and then lifted back.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .linalg import dot, first_nonzero_positive, inverse, nullspace, primitive, rank, rref
from .lp import solve_standard

__all__ = [
    "AffineHull",
    "Halfspace",
    "HRepresentation",
    "MembershipResult",
    "CertificateError",
    "affine_hull",
    "facet_enumeration",
    "hull_membership",
]


class CertificateError(AssertionError):
    """A computed certificate failed its own re-verification."""


def _points(points) -> list:
    pts = [[Fraction(x) for x in p] for p in points]
    if not pts:
        raise ValueError("need at least one point")
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise ValueError("points have different dimensions")
    return pts


@dataclass
class AffineHull:
    base: list
    directions: list  # reduced echelon basis of span{p - base}
    pivots: list  # pivot coordinate of each direction
    equalities: list  # (normal, offset) pairs, normal·x = offset

    @property
    def dimension(self) -> int:
        return len(self.directions)


def affine_hull(points: Sequence[Sequence]) -> AffineHull:
    pts = _points(points)
    base = pts[0]
    n = len(base)
    diffs = [[a - b for a, b in zip(p, base)] for p in pts[1:]]
    directions, pivots = rref(diffs, n) if diffs else ([], [])
    equalities = []
    for row in nullspace(directions, n):
        a, c = primitive(row, dot(row, base))
        a, c = first_nonzero_positive(a, c)
        equalities.append((a, c))
    return AffineHull(base, directions, pivots, equalities)


@dataclass(frozen=True)
class Halfspace:
    """``normal·x >= offset`` (or ``==`` for an equality row)."""

    normal: tuple
    offset: Fraction

    def value(self, x) -> Fraction:
        return dot(self.normal, x)


@dataclass
class HRepresentation:
    dimension: int
    equalities: list = field(default_factory=list)
    inequalities: list = field(default_factory=list)
    affine_dimension: int = 0

    def contains(self, x) -> bool:
        x = [Fraction(v) for v in x]
        return all(h.value(x) == h.offset for h in self.equalities) and all(
            h.value(x) >= h.offset for h in self.inequalities
        )

    def violations(self, x) -> list:
        """Rows violated by ``x`` as ``(kind, row index, slack)``; slack < 0 or != 0."""
        x = [Fraction(v) for v in x]
        out = []
        for i, h in enumerate(self.equalities):
            s = h.value(x) - h.offset
            if s != 0:
                out.append(("eq", i, s))
        for i, h in enumerate(self.inequalities):
            s = h.value(x) - h.offset
            if s < 0:
                out.append(("ge", i, s))
        return out


def _double_description(points: list, d: int) -> list:
    """Facets of the full-dimensional hull of ``points`` in R^d.

    Works on the homogenized cone {h in R^(d+1): (1, y)·h >= 0 for all y};
    its extreme rays h = (-c, a) are exactly the facets a·y >= c.
    """
    gens = [[Fraction(1)] + list(p) for p in points]
    chosen = []
    for i, g in enumerate(gens):
        if rank([gens[j] for j in chosen] + [g]) > len(chosen):
            chosen.append(i)
        if len(chosen) == d + 1:
            break
    inv = inverse([gens[i] for i in chosen])
    # ray k is tight on every chosen generator except the k-th
    rays = []
    for k in range(d + 1):
        ray = [inv[r][k] for r in range(d + 1)]
        tight = 0
        for pos, i in enumerate(chosen):
            if pos != k:
                tight |= 1 << i
        rays.append((ray, tight))

    processed = set(chosen)
    for i, g in enumerate(gens):
        if i in processed:
            continue
        bit = 1 << i
        pos, zero, neg = [], [], []
        for ray, tight in rays:
            s = dot(g, ray)
            if s > 0:
                pos.append((ray, tight, s))
            elif s == 0:
                zero.append((ray, tight | bit))
            else:
                neg.append((ray, tight, s))
        new = [(r, t) for r, t, _ in pos] + zero
        if neg:
            everyone = [t for _, t in rays]
            for rp, tp, sp in pos:
                for rn, tn, sn in neg:
                    common = tp & tn
                    if bin(common).count("1") < d - 1:
                        continue
                    if any((t & common) == common and t not in (tp, tn) for t in everyone):
                        continue
                    combo = [sp * b - sn * a for a, b in zip(rp, rn)]
                    new.append((combo, common | bit))
        rays = new
        processed.add(i)

    facets = []
    for ray, tight in rays:
        touching = [gens[i] for i in range(len(gens)) if tight >> i & 1]
        if rank(touching) != d:
            continue  # not a facet (cannot happen for a proper DD run)
        facets.append(ray)
    return facets


def facet_enumeration(points: Sequence[Sequence]) -> HRepresentation:
    """Canonical H-representation of the convex hull of ``points``.

    Equalities come from the affine hull (reduced echelon normals, primitive,
    first nonzero entry positive).  Inequalities ``a·x >= c`` are written in
    the pivot coordinates of the affine hull, scaled to primitive integer
    normals and sorted; they are facet-defining relative to the equalities.
    """
    pts = _points(points)
    n = len(pts[0])
    hull = affine_hull(pts)
    rep = HRepresentation(n, [Halfspace(tuple(a), c) for a, c in hull.equalities], [], hull.dimension)
    d = hull.dimension
    if d == 0:
        return rep
    reduced = [[p[j] for j in hull.pivots] for p in pts]
    seen = set()
    ineqs = []
    for ray in _double_description(reduced, d):
        a_red, c = primitive(ray[1:], -ray[0])
        normal = [Fraction(0)] * n
        for j, coef in zip(hull.pivots, a_red):
            normal[j] = coef
        key = (tuple(normal), c)
        if key not in seen:
            seen.add(key)
            ineqs.append(Halfspace(tuple(normal), c))
    ineqs.sort(key=lambda h: (tuple(-x for x in h.normal), h.offset))
    rep.inequalities = ineqs
    _check_facets(rep, pts)
    return rep


def _check_facets(rep: HRepresentation, pts: list) -> None:
    for p in pts:
        if not rep.contains(p):
            raise CertificateError(f"generating point {p} violates its own hull description")


@dataclass
class MembershipResult:
    member: bool
    coefficients: list | None = None
    separator: tuple | None = None  # (x, c): v·x >= c for all points, b·x < c

    def __bool__(self) -> bool:
        return self.member


def hull_membership(points: Sequence[Sequence], b: Sequence) -> MembershipResult:
    """Is ``b`` a convex combination of ``points``?

    Solves lambda >= 0, sum(lambda) = 1, sum(lambda_i v_i) = b exactly.  If
    infeasible, the Farkas certificate of the phase-one problem is turned into
    a separating hyperplane (x, c) with v·x >= c > b·x for every point v.
    Both certificates are re-verified before returning.
    """
    pts = _points(points)
    b = [Fraction(x) for x in b]
    n = len(pts[0])
    if len(b) != n:
        raise ValueError(f"point has dimension {len(b)}, hull lives in {n}")
    A = [[p[k] for p in pts] for k in range(n)] + [[Fraction(1)] * len(pts)]
    rhs = b + [Fraction(1)]
    res = solve_standard([Fraction(0)] * len(pts), A, rhs)
    if res.optimal:
        lam = res.x
        result = MembershipResult(True, coefficients=lam)
    else:
        y = res.farkas
        x, c = primitive(y[:n], -y[n])
        result = MembershipResult(False, separator=(x, c))
    verify_membership(pts, b, result)
    return result


def verify_membership(points, b, result: MembershipResult) -> None:
    """Re-check a membership certificate by direct arithmetic."""
    pts = _points(points)
    b = [Fraction(x) for x in b]
    if result.member:
        lam = result.coefficients
        if result.separator is not None or lam is None or len(lam) != len(pts):
            raise CertificateError("malformed membership certificate")
        if any(l < 0 for l in lam) or sum(lam) != 1:
            raise CertificateError("coefficients are not a convex combination")
        mix = [sum((l * p[k] for l, p in zip(lam, pts)), Fraction(0)) for k in range(len(b))]
        if mix != b:
            raise CertificateError("coefficients do not reproduce the point")
    else:
        if result.coefficients is not None or result.separator is None:
            raise CertificateError("malformed separation certificate")
        x, c = result.separator
        if any(dot(p, x) < c for p in pts) or not dot(b, x) < c:
            raise CertificateError("separator does not strictly separate")
