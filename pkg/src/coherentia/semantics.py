"""Valuations, the finite quotient of the formula algebra, and consequence.

Everything is computed on *truth vectors*: the tuple of truth-value indices a
formula takes under each valuation of a fixed letter set, in lexicographic
valuation order.  Two formulas are identified by the congruence ~ exactly when
their truth vectors coincide, so the quotient algebra is the set of vectors
reachable from the letter projections under pointwise connective application.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .formula import HOLE, Apply, Formula, Letter, letters_of, render_formula
from .truth import LogicSpec

__all__ = [
    "DEFAULT_CAP",
    "ClosureCapExceeded",
    "Valuation",
    "QuotientAlgebra",
    "CognitiveMatrix",
    "ExpressibilityReport",
    "enumerate_valuations",
    "eval_formula",
    "truth_vector",
    "quotient_algebra",
    "entails",
    "entails_vectors",
    "countervaluation",
    "valid_vector",
    "explosive_vector",
    "logically_equivalent",
    "check_equivalence_expressibility",
    "cognitive_matrix",
]

DEFAULT_CAP = 100_000


class ClosureCapExceeded(RuntimeError):
    def __init__(self, cap: int, size: int):
        self.cap = cap
        self.size = size
        super().__init__(f"quotient closure exceeded cap {cap} (reached {size} classes)")


@dataclass(frozen=True)
class Valuation:
    letters: tuple
    values: tuple

    def __getitem__(self, letter: str) -> int:
        return self.values[self.letters.index(letter)]

    def as_dict(self) -> dict:
        return dict(zip(self.letters, self.values))

    def describe(self, spec: LogicSpec) -> str:
        return ", ".join(f"{x}↦{spec.label(v)}" for x, v in zip(self.letters, self.values))


def _ordered_letters(letters: Iterable[str]) -> tuple:
    letters = tuple(dict.fromkeys(letters))
    if not letters:
        raise ValueError("letter set must be nonempty")
    return letters


def enumerate_valuations(spec: LogicSpec, letters: Sequence[str]) -> list[Valuation]:
    """All |A|^|letters| valuations, lexicographic in the assigned indices
    (first letter most significant)."""
    letters = _ordered_letters(letters)
    return [Valuation(letters, values) for values in itertools.product(range(spec.size), repeat=len(letters))]


def _eval_index(spec: LogicSpec, f: Formula, env: Mapping[str, int]) -> int:
    if isinstance(f, Letter):
        try:
            return env[f.name]
        except KeyError:
            raise KeyError(f"unbound letter {f.name!r}") from None
    c = spec.connective(f.connective)
    return c.table[tuple(_eval_index(spec, a, env) for a in f.args)]


def eval_formula(v: Valuation, f: Formula, spec: LogicSpec):
    """Truth value of ``f`` under ``v``, by bottom-up table lookup."""
    return spec.truth_values[_eval_index(spec, f, v.as_dict())]


def apply_pointwise(spec: LogicSpec, connective: str, *vectors: tuple) -> tuple:
    table = spec.connective(connective).table
    return tuple(table[args] for args in zip(*vectors))


def _vector(spec, f, env) -> tuple:
    if isinstance(f, Letter):
        try:
            return env[f.name]
        except KeyError:
            raise KeyError(f"unbound letter {f.name!r}") from None
    return apply_pointwise(spec, f.connective, *(_vector(spec, a, env) for a in f.args))


def letter_vectors(spec: LogicSpec, letters: Sequence[str]) -> dict:
    vals = enumerate_valuations(spec, letters)
    return {x: tuple(v.values[i] for v in vals) for i, x in enumerate(vals[0].letters)}


def truth_vector(spec: LogicSpec, f: Formula, letters: Sequence[str], env: Mapping[str, tuple] | None = None) -> tuple:
    """Truth vector of ``f`` over the valuations of ``letters``.

    ``env`` may bind extra letters (metavariables, the context hole) directly
    to vectors.
    """
    base = letter_vectors(spec, letters)
    if env:
        base.update(env)
    return _vector(spec, f, base)


@dataclass
class QuotientAlgebra:
    spec: LogicSpec
    letters: tuple
    valuations: list
    classes: list
    representatives: list
    index: dict = field(repr=False)

    def __len__(self) -> int:
        return len(self.classes)

    def vector_of(self, f: Formula, env: Mapping[str, tuple] | None = None) -> tuple:
        base = {x: tuple(v.values[i] for v in self.valuations) for i, x in enumerate(self.letters)}
        if env:
            base.update(env)
        return _vector(self.spec, f, base)

    def class_of(self, f: Formula) -> int:
        return self.index[self.vector_of(f)]

    def rendered(self) -> list[str]:
        return [render_formula(r, self.spec) for r in self.representatives]


def quotient_algebra(spec: LogicSpec, letters: Sequence[str], cap: int = DEFAULT_CAP) -> QuotientAlgebra:
    """Finite quotient of the formula algebra over ``letters``.

    Closure runs level by level in node count, so each class is first met at
    its minimal size; among same-size witnesses the lexicographically least
    rendering is kept.  Each tuple of known classes is combined exactly once.
    """
    letters = _ordered_letters(letters)
    if cap < len(letters):
        raise ValueError(f"cap {cap} smaller than the number of letters")
    valuations = enumerate_valuations(spec, letters)
    proj = letter_vectors(spec, letters)

    found: dict[tuple, tuple] = {}  # vector -> (size, rendering, formula)
    by_size: dict[int, list] = {}

    def admit(level: dict, size: int):
        for vec, (text, f) in sorted(level.items(), key=lambda kv: kv[1][0]):
            found[vec] = (size, text, f)
            by_size.setdefault(size, []).append(vec)
        if len(found) > cap:
            raise ClosureCapExceeded(cap, len(found))

    level = {}
    for x in letters:
        vec = proj[x]
        if vec not in level or x < level[vec][0]:
            level[vec] = (x, Letter(x))
    admit(level, 1)

    unary = [c for c in spec.connectives if c.arity == 1]
    binary = [c for c in spec.connectives if c.arity == 2]
    max_arity = 2 if binary else 1

    size = 1
    while size < 1 + max_arity * max(by_size):
        size += 1
        level = {}

        def offer(vec, make):
            if vec in found:
                return
            f = make()
            text = render_formula(f, spec)
            if vec not in level or text < level[vec][0]:
                level[vec] = (text, f)

        for c in unary:
            for u in by_size.get(size - 1, ()):
                vec = tuple(c.table[(a,)] for a in u)
                offer(vec, lambda c=c, u=u: Apply(c.name, (found[u][2],)))
        for c in binary:
            for s1 in range(1, size - 1):
                s2 = size - 1 - s1
                for u in by_size.get(s1, ()):
                    for w in by_size.get(s2, ()):
                        vec = tuple(c.table[ab] for ab in zip(u, w))
                        offer(vec, lambda c=c, u=u, w=w: Apply(c.name, (found[u][2], found[w][2])))
        if level:
            admit(level, size)

    ordered = sorted(found.items(), key=lambda kv: (kv[1][0], kv[1][1]))
    classes = [vec for vec, _ in ordered]
    reps = [info[2] for _, info in ordered]
    return QuotientAlgebra(spec, letters, valuations, classes, reps, {v: i for i, v in enumerate(classes)})


# -- consequence --------------------------------------------------------------


def entails_vectors(spec: LogicSpec, u: tuple, w: tuple) -> bool:
    for rule in spec.consequence:
        for a, b in zip(u, w):
            if a in rule.from_set and b not in rule.to_set:
                return False
    return True


def valid_vector(spec: LogicSpec, u: tuple) -> bool:
    """|= phi: every valuation lands in the conclusion set of every rule."""
    return all(a in rule.to_set for rule in spec.consequence for a in u)


def explosive_vector(spec: LogicSpec, u: tuple) -> bool:
    """phi |= (phi entails every formula): no valuation puts phi in the premise
    set of a rule whose conclusion set is a proper subset of the values."""
    everything = frozenset(range(spec.size))
    return all(a not in rule.from_set for rule in spec.consequence if rule.to_set != everything for a in u)


def _pair_letters(f: Formula, g: Formula, letters) -> tuple:
    if letters is None:
        letters = letters_of(f) + letters_of(g)
    return _ordered_letters(letters)


def countervaluation(spec: LogicSpec, phi: Formula, psi: Formula, letters: Sequence[str] | None = None):
    """First valuation breaking phi |= psi, or ``None`` when it holds."""
    letters = _pair_letters(phi, psi, letters)
    for v in enumerate_valuations(spec, letters):
        env = v.as_dict()
        a, b = _eval_index(spec, phi, env), _eval_index(spec, psi, env)
        for rule in spec.consequence:
            if a in rule.from_set and b not in rule.to_set:
                return v
    return None


def entails(spec: LogicSpec, phi: Formula, psi: Formula, letters: Sequence[str] | None = None) -> bool:
    """phi |= psi, over the valuations of ``letters`` (default: letters of both)."""
    letters = _pair_letters(phi, psi, letters)
    return entails_vectors(spec, truth_vector(spec, phi, letters), truth_vector(spec, psi, letters))


def equivalent_vectors(spec: LogicSpec, u: tuple, w: tuple) -> bool:
    for ctx in spec.equivalence.contexts:
        cu = _vector(spec, ctx, {HOLE.name: u})
        cw = _vector(spec, ctx, {HOLE.name: w})
        if not (entails_vectors(spec, cu, cw) and entails_vectors(spec, cw, cu)):
            return False
    return True


def logically_equivalent(spec: LogicSpec, phi: Formula, psi: Formula, letters: Sequence[str] | None = None) -> bool:
    """Mutual entailment through every context of the equivalence scheme."""
    letters = _pair_letters(phi, psi, letters)
    return equivalent_vectors(spec, truth_vector(spec, phi, letters), truth_vector(spec, psi, letters))


@dataclass
class ExpressibilityReport:
    holds: bool
    pairs_checked: int
    witness: tuple | None = None  # (phi, psi) representatives

    def __bool__(self) -> bool:
        return self.holds


def check_equivalence_expressibility(spec: LogicSpec, quotient) -> ExpressibilityReport:
    """Does the equivalence scheme separate exactly the quotient classes?

    ``quotient`` is a :class:`QuotientAlgebra` or a letter set.  Pairs are
    scanned ordered by their later class, so the reported witness is the
    earliest pair in class order to go wrong.
    """
    if not isinstance(quotient, QuotientAlgebra):
        quotient = quotient_algebra(spec, quotient)
    n = len(quotient.classes)
    checked = 0
    for j in range(n):
        for i in range(j + 1):
            checked += 1
            same = equivalent_vectors(spec, quotient.classes[i], quotient.classes[j])
            if same != (i == j):
                pair = (quotient.representatives[i], quotient.representatives[j])
                return ExpressibilityReport(False, checked, pair)
    return ExpressibilityReport(True, checked)


# -- cognitive evaluations ----------------------------------------------------


@dataclass
class CognitiveMatrix:
    valuations: list
    columns: list  # representative formulas
    rows: list  # rows[w][j] = e(w(phi_j))

    @property
    def shape(self) -> tuple:
        return len(self.rows), len(self.columns)


def cognitive_matrix(spec: LogicSpec, quotient: QuotientAlgebra) -> CognitiveMatrix:
    loads = spec.loads()
    rows = [
        [loads[vec[w]] for vec in quotient.classes]
        for w in range(len(quotient.valuations))
    ]
    return CognitiveMatrix(list(quotient.valuations), list(quotient.representatives), rows)
