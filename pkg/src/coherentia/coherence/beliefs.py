"""Coherence of finite belief assignments and Dutch book extraction.

Bets settle at cognitive evaluations: a bet with stake s on theta at betting
quotient B(theta) pays the bettor s·(e(w(theta)) - B(theta)) under valuation w.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from ..formula import Formula, letters_of, parse_formula, render_formula
from ..geometry import HRepresentation, MembershipResult, facet_enumeration, hull_membership
from ..geometry.linalg import dot
from ..semantics import enumerate_valuations, truth_vector
from ..truth import LogicSpec, parse_rational
from .axioms import linear_axiom, render_linear

__all__ = [
    "BeliefAssignment",
    "CoherenceVerdict",
    "DutchBook",
    "check_coherence",
    "extract_dutch_book",
    "verify_dutch_book",
    "load_beliefs",
]


class BeliefError(ValueError):
    pass


@dataclass(frozen=True)
class BeliefAssignment:
    """Betting quotients on finitely many distinct formulas."""

    entries: tuple  # ((formula, value), ...)

    def __post_init__(self):
        entries = tuple((f, Fraction(v)) for f, v in self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise BeliefError("empty belief assignment")
        seen = set()
        for f, v in entries:
            if not 0 <= v <= 1:
                raise BeliefError(f"belief value {v} out of [0,1]")
            if f in seen:
                raise BeliefError(f"formula {f} assigned twice")
            seen.add(f)

    @classmethod
    def from_texts(cls, spec: LogicSpec, pairs) -> "BeliefAssignment":
        """From ``{"p & ~q": "3/10", ...}`` or an iterable of such pairs."""
        if isinstance(pairs, Mapping):
            pairs = pairs.items()
        return cls(tuple((parse_formula(t, spec), parse_rational(v)) for t, v in pairs))

    @property
    def formulas(self) -> list:
        return [f for f, _ in self.entries]

    @property
    def values(self) -> list:
        return [v for _, v in self.entries]

    @property
    def letters(self) -> tuple:
        return tuple(dict.fromkeys(x for f in self.formulas for x in letters_of(f)))

    def as_dict(self) -> dict:
        return dict(self.entries)

    def __getitem__(self, f: Formula) -> Fraction:
        return self.as_dict()[f]


def _evaluation_points(spec: LogicSpec, formulas, letters) -> tuple[list, list]:
    valuations = enumerate_valuations(spec, letters)
    loads = spec.loads()
    vectors = [truth_vector(spec, f, letters) for f in formulas]
    points = [[loads[vec[w]] for vec in vectors] for w in range(len(valuations))]
    return valuations, points


@dataclass
class CoherenceVerdict:
    coherent: bool
    assignment: BeliefAssignment
    valuations: list
    points: list  # cognitive evaluations restricted to the assignment's formulas
    membership: MembershipResult
    hrep: HRepresentation | None = None
    separator: tuple | None = None  # (x, c) with v·x >= c > b·x
    violated: dict | None = None  # the hull axiom the assignment breaks

    @property
    def coefficients(self) -> list | None:
        return self.membership.coefficients

    def mixture(self) -> list:
        """``(valuation, weight)`` pairs with positive weight."""
        if not self.coherent:
            return []
        return [(v, l) for v, l in zip(self.valuations, self.coefficients) if l != 0]

    def __bool__(self) -> bool:
        return self.coherent


def check_coherence(spec: LogicSpec, assignment: BeliefAssignment) -> CoherenceVerdict:
    """Is the assignment a convex combination of restricted cognitive evaluations?

    Coherent verdicts carry the mixture weights over valuations.  Incoherent
    ones carry the hull axiom the assignment violates (the first violated row
    of the restricted H-representation, equalities first) and, from it, a
    separating hyperplane in canonical primitive form.
    """
    letters = assignment.letters
    valuations, points = _evaluation_points(spec, assignment.formulas, letters)
    b = assignment.values
    membership = hull_membership(points, b)
    if membership.member:
        return CoherenceVerdict(True, assignment, valuations, points, membership)

    hrep = facet_enumeration(points)
    names = [render_formula(f, spec) for f in assignment.formulas]
    separator = violated = None
    for i, h in enumerate(hrep.equalities):
        s = dot(h.normal, b) - h.offset
        if s != 0:
            x, c = (list(h.normal), h.offset) if s < 0 else ([-a for a in h.normal], -h.offset)
            separator = (x, c)
            violated = {
                "kind": "eq",
                "row": i,
                "text": render_linear(names, h.normal, h.offset, "eq"),
                "inequality": linear_axiom(assignment.formulas, h.normal, h.offset, True),
            }
            break
    else:
        for i, h in enumerate(hrep.inequalities):
            if dot(h.normal, b) < h.offset:
                separator = (list(h.normal), h.offset)
                violated = {
                    "kind": "ge",
                    "row": i,
                    "text": render_linear(names, h.normal, h.offset, "ge"),
                    "inequality": linear_axiom(assignment.formulas, h.normal, h.offset, False),
                }
                break
    if separator is None:
        # the facet description is complete, so this is unreachable; fall back
        # on the Farkas separator rather than fail
        separator = membership.separator
    return CoherenceVerdict(False, assignment, valuations, points, membership, hrep, separator, violated)


@dataclass(frozen=True)
class DutchBook:
    bets: tuple  # ((formula, stake), ...)
    guaranteed_loss_bound: Fraction

    def scaled(self, t) -> "DutchBook":
        t = Fraction(t)
        if t <= 0:
            raise ValueError("scale must be positive")
        return DutchBook(tuple((f, s * t) for f, s in self.bets), self.guaranteed_loss_bound * t)

    def stakes(self) -> dict:
        out = {}
        for f, s in self.bets:
            out[f] = out.get(f, Fraction(0)) + Fraction(s)
        return out


def extract_dutch_book(spec: LogicSpec, assignment: BeliefAssignment, separator) -> DutchBook:
    """Stakes ``s = -x`` from a separator ``(x, c)`` or an incoherent verdict.

    The bettor's net under any valuation is ``-(v·x - b·x) <= -(c - b·x)``, so
    ``c - b·x`` is a guaranteed loss.
    """
    if isinstance(separator, CoherenceVerdict):
        if separator.coherent:
            raise ValueError("no Dutch book against a coherent assignment")
        separator = separator.separator
    if separator is None:
        raise ValueError("no separator supplied")
    x, c = separator
    b = assignment.values
    loss = Fraction(c) - dot(b, x)
    if loss <= 0:
        raise ValueError("separator does not separate the assignment")
    book = DutchBook(tuple((f, -Fraction(xi)) for f, xi in zip(assignment.formulas, x)), loss)
    worst = verify_dutch_book(spec, assignment, book)
    if worst > -loss:
        raise AssertionError(f"extracted book pays {worst} somewhere, above the bound {-loss}")
    return book


def verify_dutch_book(spec: LogicSpec, assignment: BeliefAssignment, book: DutchBook) -> Fraction:
    """Best case for the bettor: max over valuations of the net payoff.

    A valid book makes this negative.  Repeated formulas merge by adding stakes.
    """
    stakes = book.stakes()
    quotients = assignment.as_dict()
    missing = [f for f in stakes if f not in quotients]
    if missing:
        raise ValueError(f"book bets on formulas outside the assignment: {missing}")
    formulas = list(stakes)
    letters = tuple(dict.fromkeys(assignment.letters + tuple(x for f in formulas for x in letters_of(f))))
    _, points = _evaluation_points(spec, formulas, letters)
    s = [stakes[f] for f in formulas]
    b = [quotients[f] for f in formulas]
    return max(sum((si * (vi - bi) for si, vi, bi in zip(s, row, b)), Fraction(0)) for row in points)


def load_beliefs(path: str, spec: LogicSpec | None = None, resolve_logic=None):
    """Read a belief file; returns ``(spec, assignment)``.

    The file's ``logic`` key is used unless ``spec`` is given; ``resolve_logic``
    maps that key to a spec.
    """
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise BeliefError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    if spec is None:
        if "logic" not in data or resolve_logic is None:
            raise BeliefError(f"{path}: no logic given")
        spec = resolve_logic(data["logic"])
    try:
        pairs = [(entry["formula"], entry["value"]) for entry in data["beliefs"]]
    except (KeyError, TypeError) as exc:
        raise BeliefError(f"{path}: malformed beliefs: {exc!r}") from exc
    return spec, BeliefAssignment.from_texts(spec, pairs)
