"""Exact rational convex geometry: affine hulls, facets, hull membership."""

from .hull import (
    AffineHull,
    CertificateError,
    Halfspace,
    HRepresentation,
    MembershipResult,
    affine_hull,
    facet_enumeration,
    hull_membership,
    verify_membership,
)
from .lp import LPResult, solve_lp, solve_standard
from .polyhedron import Polyhedron

__all__ = [
    "AffineHull",
    "CertificateError",
    "Halfspace",
    "HRepresentation",
    "MembershipResult",
    "LPResult",
    "Polyhedron",
    "affine_hull",
    "facet_enumeration",
    "hull_membership",
    "verify_membership",
    "solve_lp",
    "solve_standard",
]
