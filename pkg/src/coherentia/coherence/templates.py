"""Axiom schemata and their mechanical verification against the polytope.

A template is written as text over metavariables (uppercase letters)::

    if X |= Y and ~Y |= ~X then B(X) <= B(Y)
    if |= X then B(X) = 1          # X is valid
    if X |= then B(X) = 0          # X entails everything
    B(X | Y) = B(X) + B(Y) - B(X & Y)

Instances range over all tuples of quotient-class representatives.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ..formula import Formula, letters_of, parse_formula, render_formula
from ..geometry import Polyhedron
from ..geometry.linalg import first_nonzero_positive, primitive
from ..semantics import (
    DEFAULT_CAP,
    QuotientAlgebra,
    entails_vectors,
    explosive_vector,
    quotient_algebra,
    valid_vector,
)
from ..truth import LogicSpec
from .axioms import generate_axioms, render_linear
from .expressions import ExpressionError, FormalInequality, _evaluate, atoms, linear_form, parse_inequality

__all__ = [
    "AxiomTemplate",
    "TEMPLATES",
    "template_library",
    "SoundnessReport",
    "CompletenessReport",
    "verify_axiom_soundness",
    "verify_axiom_completeness",
]


@dataclass(frozen=True)
class AxiomTemplate:
    name: str
    text: str

    def compile(self, spec: LogicSpec) -> "_Compiled":
        body = self.text.strip()
        conditions = []
        if body.startswith("if "):
            head, sep, body = body[3:].partition(" then ")
            if not sep:
                raise ExpressionError(f"template {self.name}: 'if' without 'then'")
            for clause in head.split(" and "):
                left, sep, right = clause.partition("|=")
                if not sep:
                    raise ExpressionError(f"template {self.name}: condition {clause!r} lacks '|='")
                left, right = left.strip(), right.strip()
                if left and right:
                    conditions.append(("entails", parse_formula(left, spec), parse_formula(right, spec)))
                elif right:
                    conditions.append(("valid", parse_formula(right, spec)))
                elif left:
                    conditions.append(("explosive", parse_formula(left, spec)))
                else:
                    raise ExpressionError(f"template {self.name}: empty condition")
        inequality = parse_inequality(body, spec)
        formulas = [f for c in conditions for f in c[1:]] + atoms(inequality.lhs) + atoms(inequality.rhs)
        metavars = tuple(dict.fromkeys(x for f in formulas for x in letters_of(f)))
        return _Compiled(self.name, metavars, tuple(conditions), inequality)


@dataclass(frozen=True)
class _Compiled:
    name: str
    metavariables: tuple
    conditions: tuple
    inequality: FormalInequality

    def instances(self, spec: LogicSpec, quotient: QuotientAlgebra):
        """Yield ``(binding, leaf_vectors)`` for instances meeting the side
        condition; ``binding`` holds class indices, one per metavariable."""
        n = len(quotient.classes)
        leaves = atoms(self.inequality.lhs) + atoms(self.inequality.rhs)
        for binding in itertools.product(range(n), repeat=len(self.metavariables)):
            env = {x: quotient.classes[i] for x, i in zip(self.metavariables, binding)}
            if not all(self._condition(spec, quotient, c, env) for c in self.conditions):
                continue
            yield binding, {f: quotient.vector_of(f, env) for f in leaves}

    @staticmethod
    def _condition(spec, quotient, cond, env) -> bool:
        if cond[0] == "entails":
            return entails_vectors(spec, quotient.vector_of(cond[1], env), quotient.vector_of(cond[2], env))
        if cond[0] == "valid":
            return valid_vector(spec, quotient.vector_of(cond[1], env))
        return explosive_vector(spec, quotient.vector_of(cond[1], env))


# Axiom schemata from the literature on coherence for the built-in logics.
# P: classical; L: two-valued logics with classical & and |;
# LUK: Lukasiewicz; SL: symmetric logic; KLP1 replaces SL1 for Kleene and LP.
TEMPLATES: dict[str, list[AxiomTemplate]] = {
    "P1": [AxiomTemplate("P1", "if |= X then B(X) = 1"), AxiomTemplate("P1", "if |= ~X then B(X) = 0")],
    "P2": [AxiomTemplate("P2", "if X |= Y then B(X) <= B(Y)")],
    "P3": [AxiomTemplate("P3", "B(X | Y) = B(X) + B(Y) - B(X & Y)")],
    "L1": [AxiomTemplate("L1", "if |= X then B(X) = 1"), AxiomTemplate("L1", "if X |= then B(X) = 0")],
    "L2": [AxiomTemplate("L2", "if X |= Y then B(X) <= B(Y)")],
    "L3": [AxiomTemplate("L3", "B(X | Y) + B(X & Y) = B(X) + B(Y)")],
    "LUK1": [AxiomTemplate("LUK1", "if |= X then B(X) = 1"), AxiomTemplate("LUK1", "if X |= then B(X) = 0")],
    "LUK3": [AxiomTemplate("LUK3", "B(X | Y) + B(X & Y) = B(X) + B(Y)")],
    "SL1": [AxiomTemplate("SL1", "if X |= Y then B(X) <= B(Y)")],
    "SL2": [AxiomTemplate("SL2", "B(~X) = 1 - B(X)")],
    "SL3": [AxiomTemplate("SL3", "B(X | Y) = B(X) + B(Y) - B(X & Y)")],
    "SL4": [AxiomTemplate("SL4", "B(X) = B(X & Y) + B(X & ~Y) - B(X & ~X & Y & ~Y)")],
    "KLP1": [AxiomTemplate("KLP1", "if X |= Y and ~Y |= ~X then B(X) <= B(Y)")],
}
ALIASES = {"Ł1": "LUK1", "Ł3": "LUK3"}


def template_library(names: Sequence[str]) -> list[AxiomTemplate]:
    """Expand template names (e.g. ``["SL2", "KLP1"]``) to templates."""
    out = []
    for name in names:
        key = ALIASES.get(name, name).upper()
        if key not in TEMPLATES:
            raise KeyError(f"unknown template {name!r}; known: {', '.join(TEMPLATES)}")
        out.extend(TEMPLATES[key])
    return out


def _as_templates(templates) -> list[AxiomTemplate]:
    if isinstance(templates, (AxiomTemplate, str)):
        templates = [templates]
    out = []
    for t in templates:
        out.extend(template_library([t]) if isinstance(t, str) else [t])
    return out


@dataclass
class Violation:
    binding: tuple  # representative formulas, one per metavariable
    valuation: object
    lhs: Fraction
    rhs: Fraction


@dataclass
class SoundnessReport:
    templates: list
    letters: tuple
    instances: int = 0
    checks: int = 0
    violations: list = field(default_factory=list)  # (template name, Violation)

    @property
    def sound(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.sound

    def describe(self, spec: LogicSpec) -> list[str]:
        out = []
        for name, v in self.violations:
            binding = ", ".join(render_formula(f, spec) for f in v.binding)
            out.append(f"{name} fails for ({binding}) at {v.valuation.describe(spec)}: {v.lhs} vs {v.rhs}")
        return out


def verify_axiom_soundness(
    spec: LogicSpec,
    letters,
    templates,
    cap: int = DEFAULT_CAP,
    max_violations: int | None = None,
) -> SoundnessReport:
    """Check every cognitive evaluation against every template instance.

    ``letters`` may also be a precomputed :class:`QuotientAlgebra`.
    """
    quotient = letters if isinstance(letters, QuotientAlgebra) else quotient_algebra(spec, letters, cap)
    templates = _as_templates(templates)
    report = SoundnessReport([t.name for t in templates], quotient.letters)
    loads = spec.loads()
    for template in templates:
        compiled = template.compile(spec)
        ineq = compiled.inequality
        for binding, leaf_vectors in compiled.instances(spec, quotient):
            report.instances += 1
            for w, valuation in enumerate(quotient.valuations):
                report.checks += 1

                def belief(f, w=w):
                    return loads[leaf_vectors[f][w]]

                lhs, rhs = _evaluate(ineq.lhs, belief), _evaluate(ineq.rhs, belief)
                if not (lhs == rhs if ineq.equality else lhs <= rhs):
                    reps = tuple(quotient.representatives[i] for i in binding)
                    report.violations.append((template.name, Violation(reps, valuation, lhs, rhs)))
                    if max_violations is not None and len(report.violations) >= max_violations:
                        return report
    return report


def instance_rows(spec: LogicSpec, quotient: QuotientAlgebra, templates) -> tuple[list, list]:
    """Template instances as linear rows over class values.

    Returns ``(equalities, inequalities)`` as lists of ``(a, c)`` meaning
    ``a·x = c`` and ``a·x >= c`` respectively.
    """
    n = len(quotient.classes)
    eqs, ineqs = [], []
    for template in _as_templates(templates):
        compiled = template.compile(spec)
        ineq = compiled.inequality
        for _, leaf_vectors in compiled.instances(spec, quotient):
            column = lambda f: quotient.index[leaf_vectors[f]]  # noqa: E731
            lc, lk = linear_form(ineq.lhs, column)
            rc, rk = linear_form(ineq.rhs, column)
            # rhs - lhs >= 0
            a = [Fraction(0)] * n
            for j, v in rc.items():
                a[j] += v
            for j, v in lc.items():
                a[j] -= v
            c = lk - rk
            (eqs if ineq.equality else ineqs).append((a, c))
    return eqs, ineqs


def _dedupe(rows, equality=False) -> list:
    seen, out = set(), []
    for a, c in rows:
        if all(x == 0 for x in a):
            continue
        a, c = primitive(a, c)
        if equality:
            a, c = first_nonzero_positive(a, c)
        key = (tuple(a), c)
        if key not in seen:
            seen.add(key)
            out.append((a, c))
    return out


@dataclass
class CompletenessReport:
    status: str  # "complete", "incomplete" or "unsound"
    letters: tuple
    missing: dict | None = None  # the generated axiom not implied by the templates
    witness: dict | None = None  # representative text -> value, satisfies templates
    soundness: SoundnessReport | None = None
    unimplied_template_rows: int = 0

    @property
    def complete(self) -> bool:
        return self.status == "complete"

    def __bool__(self) -> bool:
        return self.complete


def verify_axiom_completeness(spec: LogicSpec, letters, templates, cap: int = DEFAULT_CAP) -> CompletenessReport:
    """Do the templates (plus 0 <= B <= 1) cut out exactly the cognitive polytope?

    Both directions are decided by exact LPs: every generated facet must be
    implied by the template system, and every template row by the facets.
    """
    templates = _as_templates(templates)
    quotient = letters if isinstance(letters, QuotientAlgebra) else quotient_algebra(spec, letters, cap)
    soundness = verify_axiom_soundness(spec, quotient, templates, max_violations=1)
    if not soundness.sound:
        return CompletenessReport("unsound", quotient.letters, soundness=soundness)

    n = len(quotient.classes)
    eqs, ineqs = instance_rows(spec, quotient, templates)
    for j in range(n):
        unit = [Fraction(int(k == j)) for k in range(n)]
        ineqs.append((unit, Fraction(0)))
        ineqs.append(([-x for x in unit], Fraction(-1)))
    system = Polyhedron(n, eqs, ineqs)

    axioms = generate_axioms(spec, quotient.letters, cap)
    names = quotient.rendered()
    polytope = Polyhedron(
        n,
        [(h.normal, h.offset) for h in axioms.hrep.equalities],
        [(h.normal, h.offset) for h in axioms.hrep.inequalities],
    )

    for axiom in axioms.axioms:
        a, c = list(axiom.normal), axiom.offset
        checks = [("le", a, c), ("ge", a, c)] if axiom.kind == "eq" else [("ge", a, c)]
        for side, normal, offset in checks:
            if side == "le":
                best = system.maximize(normal)
                broken = best is not None and best[0] > offset
            else:
                best = system.minimize(normal)
                broken = best is not None and best[0] < offset
            if broken:
                text = render_linear(names, normal, offset, "eq" if axiom.kind == "eq" else "ge")
                if axiom.kind == "eq":
                    text = text.replace(" = ", " <= " if side == "le" else " >= ")
                missing = {"kind": axiom.kind, "side": side, "row": axiom.row, "text": text, "optimum": best[0]}
                witness = dict(zip(names, best[1]))
                return CompletenessReport("incomplete", quotient.letters, missing, witness, soundness)

    unimplied = 0
    eqs, ineqs = _dedupe(eqs, equality=True), _dedupe(ineqs)
    for a, c in eqs:
        lo, hi = polytope.minimize(a), polytope.maximize(a)
        if lo[0] != c or hi[0] != c:
            unimplied += 1
    for a, c in ineqs:
        if polytope.minimize(a)[0] < c:
            unimplied += 1
    if unimplied:
        # cannot happen for sound templates; kept as an explicit cross-check
        return CompletenessReport("unsound", quotient.letters, soundness=soundness, unimplied_template_rows=unimplied)
    return CompletenessReport("complete", quotient.letters, soundness=soundness)
