"""Finite logics: truth-value algebras, cognitive loads, consequence rules.

A logic here is the tuple (formula algebra, algebra of truth values,
consequence, cognitive load).  The formula algebra is implicit in the
declared connectives; everything else is stored explicitly and exactly.
"""

from __future__ import annotations

import itertools
import json
import os
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .formula import HOLE, IDENTIFIER, Apply, Formula, FormulaSyntaxError, Letter, parse_formula

__all__ = [
    "TruthValue",
    "Connective",
    "CognitiveLoad",
    "ConsequenceRule",
    "EquivalenceScheme",
    "LogicSpec",
    "LogicError",
    "ValidationReport",
    "validate_logic",
    "builtin_logic",
    "builtin_names",
    "logic_from_dict",
    "logic_to_dict",
    "load_logic",
    "parse_rational",
]


class LogicError(ValueError):
    """A logic definition is unknown, malformed or fails validation."""


def parse_rational(value) -> Fraction:
    """Exact rational from ``"p/q"``, a decimal string, an int or a Fraction.

    Decimals are read exactly: ``"0.3"`` is 3/10.  Binary floats are rejected
    unless they came from a decimal literal (``str(x)`` round-trips).
    """
    if isinstance(value, bool):
        raise LogicError(f"not a rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            pass
    raise LogicError(f"not a rational: {value!r}")


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))


@dataclass(frozen=True)
class TruthValue:
    index: int
    label: str
    numeric: Fraction | None = None


@dataclass(frozen=True)
class Connective:
    name: str
    arity: int
    table: Mapping[tuple, int]
    precedence: int = 0

    @property
    def fixity(self) -> str:
        return "prefix" if self.arity == 1 else "infix"

    def __call__(self, *args: int) -> int:
        return self.table[args]


@dataclass(frozen=True)
class CognitiveLoad:
    load: Mapping[int, Fraction]

    def __getitem__(self, index: int) -> Fraction:
        return self.load[index]


@dataclass(frozen=True)
class ConsequenceRule:
    """phi |= psi requires: h(phi) in from_set implies h(psi) in to_set."""

    from_set: frozenset
    to_set: frozenset


@dataclass(frozen=True)
class EquivalenceScheme:
    """Contexts C (formulas with one hole) through which mutual entailment
    must hold for two formulas to count as logically equivalent."""

    contexts: tuple

    @classmethod
    def identity(cls) -> "EquivalenceScheme":
        return cls((HOLE,))


@dataclass(frozen=True)
class LogicSpec:
    name: str
    truth_values: tuple
    connectives: tuple
    load: CognitiveLoad
    consequence: tuple
    equivalence: EquivalenceScheme = field(default_factory=EquivalenceScheme.identity)

    @property
    def size(self) -> int:
        return len(self.truth_values)

    def connective(self, name: str) -> Connective:
        for c in self.connectives:
            if c.name == name:
                return c
        raise KeyError(name)

    def value(self, label: str) -> TruthValue:
        for tv in self.truth_values:
            if tv.label == label:
                return tv
        raise KeyError(label)

    def label(self, index: int) -> str:
        return self.truth_values[index].label

    def loads(self) -> tuple:
        """Load of every truth value, by index."""
        return tuple(self.load[tv.index] for tv in self.truth_values)


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)
    degenerate: bool = False

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def _context_ok(f: Formula, arities: dict) -> list:
    problems = []
    if isinstance(f, Letter):
        if f.name != HOLE.name:
            problems.append(f"context uses letter {f.name!r}; only the hole '_' is allowed")
        return problems
    if arities.get(f.connective) != len(f.args):
        problems.append(f"context uses unknown connective {f.connective!r}")
    for a in f.args:
        problems.extend(_context_ok(a, arities))
    return problems


def validate_logic(spec: LogicSpec) -> ValidationReport:
    """Collect every structural problem of ``spec``; never raises."""
    report = ValidationReport()
    bad = report.violations
    n = len(spec.truth_values)
    if n == 0:
        bad.append("no truth values")
    if [tv.index for tv in spec.truth_values] != list(range(n)):
        bad.append("bad index: truth value indices must be 0..n-1 in order")
    labels = [tv.label for tv in spec.truth_values]
    if len(set(labels)) != len(labels):
        bad.append("duplicate labels")
    for tv in spec.truth_values:
        if tv.numeric is not None and not 0 <= tv.numeric <= 1:
            bad.append(f"numeric value of {tv.label!r} out of [0,1]")

    names = [c.name for c in spec.connectives]
    if len(set(names)) != len(names):
        bad.append("duplicate connective tokens")
    if not spec.connectives:
        report.degenerate = True
    for c in spec.connectives:
        if not c.name or IDENTIFIER.match(c.name) or re.search(r"[\s()_]", c.name):
            bad.append(f"connective token {c.name!r} must be a non-identifier without spaces, parentheses or '_'")
        if c.arity not in (1, 2):
            bad.append(f"connective {c.name!r}: arity {c.arity} unsupported (only 1 and 2)")
            continue
        for args in itertools.product(range(n), repeat=c.arity):
            if args not in c.table:
                labs = ",".join(spec.label(a) for a in args)
                bad.append(f"partial table: {c.name!r} undefined at ({labs})")
            elif not (isinstance(c.table[args], int) and 0 <= c.table[args] < n):
                bad.append(f"bad index: {c.name!r} maps to {c.table[args]!r}")
        extra = [k for k in c.table if len(k) != c.arity or any(not 0 <= a < n for a in k)]
        if extra:
            bad.append(f"bad index: {c.name!r} has entries outside the algebra")

    for tv in spec.truth_values:
        if tv.index not in spec.load.load:
            bad.append(f"load undefined at {tv.label!r}")
        elif not 0 <= spec.load.load[tv.index] <= 1:
            bad.append(f"load out of [0,1] at {tv.label!r}: {spec.load.load[tv.index]}")

    if not spec.consequence:
        bad.append("no consequence rules")
    for rule in spec.consequence:
        for part in (rule.from_set, rule.to_set):
            if not part:
                bad.append("consequence rule with empty set")
            elif any(not (isinstance(i, int) and 0 <= i < n) for i in part):
                bad.append("bad index in consequence rule")

    if not spec.equivalence.contexts:
        bad.append("empty equivalence scheme")
    arities = {c.name: c.arity for c in spec.connectives}
    for ctx in spec.equivalence.contexts:
        bad.extend(_context_ok(ctx, arities))
    return report


# -- built-in logics ----------------------------------------------------------

ASCII_CONNECTIVES = {"~": ("~", 1, 4), "&": ("&", 2, 3), "|": ("|", 2, 2), "->": ("->", 2, 1)}


def _numeric_logic(name, values, loads, ops, rules, contexts=("_",)):
    tvs = tuple(TruthValue(i, str(v), v) for i, v in enumerate(values))
    index = {v: i for i, v in enumerate(values)}
    connectives = []
    for token, fn in ops.items():
        _, arity, prec = ASCII_CONNECTIVES[token]
        table = {
            args: index[fn(*(values[a] for a in args))]
            for args in itertools.product(range(len(values)), repeat=arity)
        }
        connectives.append(Connective(token, arity, table, prec))
    consequence = tuple(
        ConsequenceRule(frozenset(index[v] for v in a), frozenset(index[v] for v in b)) for a, b in rules
    )
    spec = LogicSpec(
        name=name,
        truth_values=tvs,
        connectives=tuple(connectives),
        load=CognitiveLoad({index[v]: Fraction(loads(v)) for v in values}),
        consequence=consequence,
        equivalence=EquivalenceScheme(()),
    )
    parsed = tuple(parse_formula(c, spec, allow_hole=True) for c in contexts)
    return LogicSpec(spec.name, spec.truth_values, spec.connectives, spec.load, spec.consequence, EquivalenceScheme(parsed))


ZERO, HALF, ONE = Fraction(0), Fraction(1, 2), Fraction(1)

KLEENE_OPS = {"~": lambda a: 1 - a, "&": min, "|": max}


def _classical():
    return _numeric_logic(
        "classical",
        [ZERO, ONE],
        lambda a: a,
        {"~": lambda a: 1 - a, "&": min, "|": max, "->": lambda a, b: max(1 - a, b)},
        [({ONE}, {ONE})],
    )


def _lukasiewicz(k: int):
    values = [Fraction(i, k) for i in range(k + 1)]
    return _numeric_logic(
        f"lukasiewicz-{k}",
        values,
        lambda a: a,
        {
            "~": lambda a: 1 - a,
            "|": lambda a, b: min(ONE, a + b),
            "&": lambda a, b: max(ZERO, a + b - 1),
            "->": lambda a, b: min(ONE, 1 - a + b),
        },
        # degree-preserving: phi |= psi iff w(phi) <= w(psi) for every w
        [({v for v in values if v >= t}, {v for v in values if v >= t}) for t in values[1:]],
    )


def _kleene_family(name):
    rules = {
        "kleene": [({ONE}, {ONE})],
        "lp": [({ONE, HALF}, {ONE, HALF})],
        "symmetric": [({ONE}, {ONE}), ({HALF}, {ONE, HALF})],
    }[name]
    contexts = ("_", "~_") if name in ("kleene", "lp") else ("_",)
    return _numeric_logic(name, [ZERO, HALF, ONE], lambda a: a, KLEENE_OPS, rules, contexts)


def builtin_names() -> list[str]:
    return ["classical", "lukasiewicz-<k>", "kleene", "lp", "symmetric"]


def builtin_logic(name: str) -> LogicSpec:
    """One of the logics with known probability axiomatizations.

    ``name`` is ``classical``, ``kleene``, ``lp``, ``symmetric`` or
    ``lukasiewicz-k`` for k >= 1 (k+1 truth values 0, 1/k, ..., 1).
    """
    if name == "classical":
        return _classical()
    if name in ("kleene", "lp", "symmetric"):
        return _kleene_family(name)
    m = re.fullmatch(r"lukasiewicz-(-?\d+)", name)
    if m:
        k = int(m.group(1))
        if k < 1:
            raise LogicError(f"lukasiewicz-k needs k >= 1, got {k}")
        return _lukasiewicz(k)
    raise LogicError(f"unknown logic {name!r}; built-ins are {', '.join(builtin_names())}")


# -- logic definition files ---------------------------------------------------


def logic_from_dict(data: Mapping) -> LogicSpec:
    """Build and validate a logic from its JSON-compatible description."""
    try:
        name = str(data.get("name", "custom"))
        tv_data = data["truth_values"]
        truth_values = []
        loads = {}
        for i, entry in enumerate(tv_data):
            label = str(entry["label"])
            try:
                numeric = parse_rational(label)
            except LogicError:
                numeric = None
            truth_values.append(TruthValue(i, label, numeric))
            loads[i] = parse_rational(entry["load"])
        index = {tv.label: tv.index for tv in truth_values}

        def idx(label):
            if str(label) not in index:
                raise LogicError(f"unknown truth value label {label!r}")
            return index[str(label)]

        connectives = []
        for entry in data.get("connectives", []):
            token = str(entry["name"])
            arity = int(entry["arity"])
            fixity = entry.get("fixity", "prefix" if arity == 1 else "infix")
            if (arity, fixity) not in ((1, "prefix"), (2, "infix")):
                raise LogicError(f"connective {token!r}: arity {arity} with fixity {fixity!r} unsupported")
            table = {}
            raw = entry["table"]
            if arity == 1:
                for a, out in enumerate(raw):
                    table[(a,)] = idx(out)
            else:
                for a, row in enumerate(raw):
                    for b, out in enumerate(row):
                        table[(a, b)] = idx(out)
            connectives.append(Connective(token, arity, table, int(entry.get("precedence", 0))))

        consequence = tuple(
            ConsequenceRule(frozenset(idx(x) for x in r["from"]), frozenset(idx(x) for x in r["to"]))
            for r in data.get("consequence", [])
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, LogicError):
            raise
        raise LogicError(f"malformed logic definition: {exc!r}") from exc

    spec = LogicSpec(name, tuple(truth_values), tuple(connectives), CognitiveLoad(loads), consequence, EquivalenceScheme(()))
    contexts = []
    for text in data.get("equivalence_contexts", ["_"]):
        try:
            contexts.append(parse_formula(text, spec, allow_hole=True))
        except FormulaSyntaxError as exc:
            raise LogicError(f"equivalence context {text!r}: {exc}") from exc
    spec = LogicSpec(spec.name, spec.truth_values, spec.connectives, spec.load, spec.consequence, EquivalenceScheme(tuple(contexts)))
    report = validate_logic(spec)
    if not report.ok:
        raise LogicError("; ".join(report.violations))
    return spec


def logic_to_dict(spec: LogicSpec) -> dict:
    from .formula import render_formula

    n = spec.size
    conns = []
    for c in spec.connectives:
        if c.arity == 1:
            table = [spec.label(c.table[(a,)]) for a in range(n)]
        else:
            table = [[spec.label(c.table[(a, b)]) for b in range(n)] for a in range(n)]
        conns.append({"name": c.name, "arity": c.arity, "fixity": c.fixity, "precedence": c.precedence, "table": table})
    return {
        "name": spec.name,
        "truth_values": [{"label": tv.label, "load": format_rational(spec.load[tv.index])} for tv in spec.truth_values],
        "connectives": conns,
        "consequence": [
            {"from": [spec.label(i) for i in sorted(r.from_set)], "to": [spec.label(i) for i in sorted(r.to_set)]}
            for r in spec.consequence
        ],
        "equivalence_contexts": [render_formula(c, spec) for c in spec.equivalence.contexts],
    }


def load_logic(path_or_name: str) -> LogicSpec:
    """A logic from a JSON file, or a built-in name.  Existing paths win."""
    if os.path.exists(path_or_name):
        with open(path_or_name, encoding="utf-8") as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise LogicError(f"{path_or_name}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
        return logic_from_dict(data)
    return builtin_logic(path_or_name)
