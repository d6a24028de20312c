from fractions import Fraction as Q

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

import oracles
from coherentia.geometry import (
    CertificateError,
    MembershipResult,
    Polyhedron,
    affine_hull,
    facet_enumeration,
    hull_membership,
    verify_membership,
)
from coherentia.geometry.hull import _check_facets
from coherentia.geometry.linalg import dot
from coherentia.geometry.lp import solve_lp, solve_standard

SEGMENT = [[0, 0, 1, 1], [0, 1, 0, 1]]
TRIANGLE = [[0, 0], [1, 0], [0, 1]]


def rows(hs):
    return [(list(h.normal), h.offset) for h in hs]


def test_affine_hull_single_point():
    h = affine_hull([[Q(1, 3), 2, 0]])
    assert h.dimension == 0 and len(h.equalities) == 3


def test_affine_hull_segment():
    h = affine_hull(SEGMENT)
    assert h.dimension == 1
    assert sorted((tuple(a), c) for a, c in h.equalities) == sorted(
        [((1, 0, 0, 0), 0), ((0, 1, 1, 0), 1), ((0, 0, 0, 1), 1)]
    )


def test_affine_hull_full_dimensional():
    h = affine_hull([[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert h.dimension == 3 and h.equalities == []


def test_segment_facets():
    rep = facet_enumeration(SEGMENT)
    assert rows(rep.equalities) == [([1, 0, 0, 0], 0), ([0, 1, 1, 0], 1), ([0, 0, 0, 1], 1)]
    assert rows(rep.inequalities) == [([1, 0, 0, 0], 0), ([-1, 0, 0, 0], -1)] or rows(rep.inequalities) == [
        ([0, 1, 0, 0], 0),
        ([0, -1, 0, 0], -1),
    ]
    # whatever coordinate is used, modulo the equalities it means 0 <= x2 <= 1
    for x2 in (Q(-1, 5), Q(0), Q(1, 2), Q(1), Q(6, 5)):
        assert rep.contains([0, x2, 1 - x2, 1]) == (0 <= x2 <= 1)


def test_single_point_facets():
    rep = facet_enumeration([[Q(1, 2), Q(3, 4)]])
    assert rep.inequalities == []
    assert rep.contains([Q(1, 2), Q(3, 4)]) and not rep.contains([Q(1, 2), 1])


def test_triangle_facets():
    rep = facet_enumeration(TRIANGLE)
    assert rep.equalities == []
    assert sorted(rows(rep.inequalities)) == sorted([([1, 0], 0), ([0, 1], 0), ([-1, -1], -1)])


def test_cube_has_six_facets():
    cube = [[a, b, c] for a in (0, 1) for b in (0, 1) for c in (0, 1)]
    rep = facet_enumeration(cube)
    assert len(rep.inequalities) == 6


def test_normals_primitive_and_signed():
    from math import gcd

    rep = facet_enumeration([[Q(1, 3), 0, 1], [Q(2, 3), 1, 1], [0, Q(1, 2), 1]])
    for h in rep.equalities + rep.inequalities:
        assert all(x.denominator == 1 for x in map(Q, h.normal))
        g = 0
        for x in h.normal:
            g = gcd(g, int(x))
        assert g == 1
    for h in rep.equalities:
        assert next(x for x in h.normal if x != 0) > 0


def test_membership_examples():
    pts = [[0, 1], [1, 0]]
    res = hull_membership(pts, [Q(3, 10), Q(7, 10)])
    assert res.member and res.coefficients == [Q(7, 10), Q(3, 10)]
    res = hull_membership(pts, [Q(3, 10), Q(4, 5)])
    assert not res.member
    x, c = res.separator
    assert all(dot(p, x) >= c for p in pts) and dot([Q(3, 10), Q(4, 5)], x) < c
    res = hull_membership(pts, [1, 0])
    assert res.coefficients == [0, 1]


def test_verifier_rejects_forged_certificates():
    pts = [[0, 1], [1, 0]]
    with pytest.raises(CertificateError):
        verify_membership(pts, [Q(1, 2), Q(1, 2)], MembershipResult(True, coefficients=[Q(1, 3), Q(2, 3)]))
    with pytest.raises(CertificateError):
        verify_membership(pts, [1, 1], MembershipResult(False, separator=([1, 1], 1)))
    with pytest.raises(CertificateError):
        _check_facets(facet_enumeration(TRIANGLE), [[1, 1]])


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        hull_membership([[0, 1]], [0, 1, 2])
    with pytest.raises(ValueError):
        facet_enumeration([[0, 1], [0]])


def test_determinism():
    pts = [[Q(i * j % 7, 7), Q((i + 2 * j) % 5, 5), Q(j, 3)] for i in range(3) for j in range(3)]
    a, b = facet_enumeration(pts), facet_enumeration(list(pts))
    assert a == b
    assert hull_membership(pts, [Q(1, 2)] * 3) == hull_membership(pts, [Q(1, 2)] * 3)


rationals = st.fractions(min_value=0, max_value=1, max_denominator=4)


@st.composite
def point_sets(draw):
    d = draw(st.integers(1, 4))
    k = draw(st.integers(1, 8))
    pts = draw(st.lists(st.lists(rationals, min_size=d, max_size=d), min_size=k, max_size=k))
    return pts


@settings(max_examples=150, deadline=None)
@given(point_sets(), st.data())
def test_hrep_agrees_with_independent_membership(pts, data):
    rep = facet_enumeration(pts)
    d = len(pts[0])
    for p in pts:
        assert rep.contains(p)
    weights = data.draw(st.lists(st.integers(0, 5), min_size=len(pts), max_size=len(pts)))
    assume(sum(weights) > 0)
    mix = [sum(Q(w) * p[i] for w, p in zip(weights, pts)) / sum(weights) for i in range(d)]
    candidates = [
        mix,
        data.draw(st.lists(st.fractions(-1, 2, max_denominator=6), min_size=d, max_size=d)),
        [x + Q(1, 8) for x in mix],
    ]
    for b in candidates:
        expected = oracles.in_hull(pts, b)
        assert rep.contains(b) == expected
        assert hull_membership(pts, b).member == expected


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 3).flatmap(lambda d: st.lists(st.lists(rationals, min_size=d, max_size=d), min_size=d + 1, max_size=7)))
def test_facets_match_brute_force(pts):
    assume(affine_hull(pts).dimension == len(pts[0]))
    rep = facet_enumeration(pts)
    mine = {oracles._scale_key(list(map(Q, h.normal)), Q(h.offset)) for h in rep.inequalities}
    assert mine == oracles.brute_facets(pts)


def test_lp_small_examples():
    # max x + y s.t. x + 2y <= 4, 3x + y <= 6, x, y >= 0
    res = solve_lp([1, 1], A_ub=[[1, 2], [3, 1]], b_ub=[4, 6], maximize=True, nonnegative=True)
    assert res.optimal and res.value == Q(14, 5) and res.x == [Q(8, 5), Q(6, 5)]
    assert solve_lp([1], A_ub=[[1], [-1]], b_ub=[-1, -1]).status == "infeasible"
    assert solve_lp([-1], A_ub=[[-1]], b_ub=[0]).status == "unbounded"


def test_farkas_certificate():
    # x1 + x2 = -1 with x >= 0 is infeasible
    A, b = [[1, 1]], [-1]
    res = solve_standard([0, 0], A, b)
    assert res.status == "infeasible"
    y = res.farkas
    assert all(sum(yi * row[j] for yi, row in zip(y, A)) >= 0 for j in range(2))
    assert dot(y, b) < 0


@settings(max_examples=100, deadline=None)
@given(
    st.integers(1, 3).flatmap(
        lambda n: st.tuples(
            st.lists(st.integers(-3, 3), min_size=n, max_size=n),
            st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), max_size=4),
            st.lists(st.integers(-2, 4), min_size=4, max_size=4),
        )
    )
)
def test_lp_against_vertex_enumeration(problem):
    c, A, b = problem
    n = len(c)
    b = b[: len(A)]
    box = [[1 if j == i else 0 for j in range(n)] for i in range(n)] + [[-1 if j == i else 0 for j in range(n)] for i in range(n)]
    A_all, b_all = A + box, b + [3] * n + [3] * n
    expected = oracles.brute_lp_min(c, A_all, b_all)
    res = solve_lp(c, A_ub=A_all, b_ub=b_all)
    if expected is None:
        assert res.status == "infeasible"
    else:
        assert res.optimal and res.value == expected


def test_polyhedron_eliminates_equalities():
    P = Polyhedron(3, equalities=[([1, 1, 1], 1)], inequalities=[([1, 0, 0], 0), ([0, 1, 0], 0), ([0, 0, 1], 0)] * 2)
    assert len(P.rows) == 3
    value, x = P.maximize([1, 2, 0])
    assert value == 2 and x == [0, 1, 0]
    assert Polyhedron(1, equalities=[([1], 1), ([2], 3)]).minimize([1]) is None
