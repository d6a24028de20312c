"""Finite probability axioms from the facets of the cognitive polytope."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ..formula import render_formula
from ..geometry import HRepresentation, facet_enumeration
from ..semantics import DEFAULT_CAP, QuotientAlgebra, cognitive_matrix, quotient_algebra
from ..truth import LogicSpec
from .expressions import Atom, Const, FormalInequality, Product, Sum

__all__ = ["Axiom", "AxiomSet", "generate_axioms", "linear_axiom", "render_linear", "logical_axiom_text"]


def _linear_expression(terms) -> object:
    expr = None
    for formula, coef in terms:
        term = Atom(formula) if coef == 1 else Product(Const(coef), Atom(formula))
        expr = term if expr is None else Sum(expr, term)
    return expr if expr is not None else Const(Fraction(0))


def linear_axiom(formulas: Sequence, normal: Sequence, offset: Fraction, equality: bool) -> FormalInequality:
    """``normal·B(formulas) >= offset`` (or ``=``) as a formal inequality."""
    terms = [(f, Fraction(a)) for f, a in zip(formulas, normal) if a != 0]
    lhs = _linear_expression(terms)
    if equality:
        return FormalInequality(lhs, Const(Fraction(offset)), equality=True)
    return FormalInequality(Const(Fraction(offset)), lhs)


def render_linear(names: Sequence[str], normal: Sequence, offset: Fraction, kind: str) -> str:
    """Text form, e.g. ``1·B(p) + 1·B(~p) = 1``.

    ``kind`` is ``"eq"`` or ``"ge"``; a ``>=`` row whose nonzero coefficients
    are all negative is printed negated as ``<=``.
    """
    normal = [Fraction(a) for a in normal]
    offset = Fraction(offset)
    rel = "=" if kind == "eq" else ">="
    nz = [a for a in normal if a != 0]
    if kind == "ge" and nz and all(a < 0 for a in nz):
        normal, offset, rel = [-a for a in normal], -offset, "<="
    parts = []
    for name, a in zip(names, normal):
        if a == 0:
            continue
        if not parts:
            parts.append(f"{'-' if a < 0 else ''}{abs(a)}·B({name})")
        else:
            parts.append(f"{'-' if a < 0 else '+'} {abs(a)}·B({name})")
    lhs = " ".join(parts) if parts else "0"
    return f"{lhs} {rel} {offset}"


def logical_axiom_text(spec: LogicSpec) -> str:
    contexts = [render_formula(c, spec) for c in spec.equivalence.contexts]
    if contexts == ["_"]:
        return "(φ ⊨ ψ and ψ ⊨ φ) ⇒ B(φ) = B(ψ)"
    clauses = " and ".join(
        f"{c.replace('_', 'φ')} ⊨ {c.replace('_', 'ψ')} and {c.replace('_', 'ψ')} ⊨ {c.replace('_', 'φ')}"
        for c in contexts
    )
    return f"({clauses}) ⇒ B(φ) = B(ψ)"


@dataclass
class Axiom:
    kind: str  # "eq" or "ge"
    normal: tuple
    offset: Fraction
    row: int  # index into the H-representation's equalities or inequalities
    inequality: FormalInequality
    text: str


@dataclass
class AxiomSet:
    spec: LogicSpec
    letters: tuple
    quotient: QuotientAlgebra
    hrep: HRepresentation
    axioms: list = field(default_factory=list)
    logical_axiom: str = ""

    @property
    def representatives(self) -> list:
        return self.quotient.representatives

    @property
    def equalities(self) -> list:
        return [a for a in self.axioms if a.kind == "eq"]

    @property
    def inequalities(self) -> list:
        return [a for a in self.axioms if a.kind == "ge"]

    def lines(self) -> list[str]:
        return [a.text for a in self.axioms]

    def satisfied_by(self, values: Sequence) -> bool:
        """Does a vector of class values (one per representative) satisfy all?"""
        return self.hrep.contains(values)

    def to_json(self) -> dict:
        return {
            "logic": self.spec.name,
            "letters": list(self.letters),
            "representatives": self.quotient.rendered(),
            "logical_axiom": self.logical_axiom,
            "axioms": [
                {
                    "kind": a.kind,
                    "coefficients": [str(x) for x in a.normal],
                    "constant": str(a.offset),
                    "text": a.text,
                    "provenance": {"rows": "equalities" if a.kind == "eq" else "inequalities", "index": a.row},
                }
                for a in self.axioms
            ],
        }


def generate_axioms(spec: LogicSpec, letters: Sequence[str], cap: int = DEFAULT_CAP) -> AxiomSet:
    """Quotient, cognitive matrix, facets; one formal inequality per facet.

    Equalities of the affine hull are kept as single ``=`` records.  Every
    cognitive evaluation is re-checked against every axiom before returning.
    """
    quotient = quotient_algebra(spec, letters, cap)
    matrix = cognitive_matrix(spec, quotient)
    hrep = facet_enumeration(matrix.rows)
    names = quotient.rendered()
    axioms = []
    for kind, rows in (("eq", hrep.equalities), ("ge", hrep.inequalities)):
        for i, h in enumerate(rows):
            axioms.append(
                Axiom(
                    kind,
                    h.normal,
                    h.offset,
                    i,
                    linear_axiom(quotient.representatives, h.normal, h.offset, kind == "eq"),
                    render_linear(names, h.normal, h.offset, kind),
                )
            )
    loads = spec.loads()
    for w in range(len(quotient.valuations)):
        belief = {rep: loads[vec[w]] for rep, vec in zip(quotient.representatives, quotient.classes)}
        for a in axioms:
            if not a.inequality.satisfied_by(belief):
                raise AssertionError(f"cognitive evaluation {w} violates generated axiom {a.text}")
    return AxiomSet(spec, quotient.letters, quotient, hrep, axioms, logical_axiom_text(spec))
