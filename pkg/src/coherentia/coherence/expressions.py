"""Formal expressions over formulas and the inequalities between them.

A formal expression is built from formulas and rational constants with formal
``+`` and ``·``; a belief function extends to it homomorphically.  Text
syntax, used by templates and CLI output::

    2·B(p) + 1/3            B(X | Y) = B(X) + B(Y) - B(X & Y)

``B(...)`` wraps a formula, ``*`` and ``·`` both multiply, ``-`` is sugar for
adding ``-1·t``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Union

from ..formula import Formula, FormulaSyntaxError, parse_formula, render_formula

__all__ = [
    "Const",
    "Atom",
    "Sum",
    "Product",
    "FormalExpression",
    "FormalInequality",
    "ExpressionError",
    "parse_expression",
    "parse_inequality",
    "render_expression",
    "evaluate_expression",
    "linear_form",
    "atoms",
]


class ExpressionError(ValueError):
    pass


@dataclass(frozen=True)
class Const:
    value: Fraction


@dataclass(frozen=True)
class Atom:
    formula: Formula


@dataclass(frozen=True)
class Sum:
    left: "FormalExpression"
    right: "FormalExpression"


@dataclass(frozen=True)
class Product:
    left: "FormalExpression"
    right: "FormalExpression"


FormalExpression = Union[Const, Atom, Sum, Product]


@dataclass(frozen=True)
class FormalInequality:
    """``lhs <= rhs``, or ``lhs = rhs`` when ``equality`` is set."""

    lhs: FormalExpression
    rhs: FormalExpression
    equality: bool = False

    def satisfied_by(self, belief) -> bool:
        a, b = evaluate_expression(belief, self.lhs), evaluate_expression(belief, self.rhs)
        return a == b if self.equality else a <= b


def atoms(t: FormalExpression) -> list:
    """Formula leaves, left to right."""
    if isinstance(t, Atom):
        return [t.formula]
    if isinstance(t, Const):
        return []
    return atoms(t.left) + atoms(t.right)


def evaluate_expression(belief, t: FormalExpression, quotient=None) -> Fraction:
    """Value of ``t`` under a belief function.

    ``belief`` is a mapping from formulas to rationals, a callable, or a
    :class:`BeliefAssignment`.  With a ``quotient``, a leaf may be any formula
    in the class of an assigned one.
    """
    lookup = _belief_lookup(belief, quotient)
    return _evaluate(t, lookup)


def _belief_lookup(belief, quotient) -> Callable:
    if hasattr(belief, "as_dict"):
        belief = belief.as_dict()
    if callable(belief) and not isinstance(belief, Mapping):
        return belief
    if quotient is not None:
        by_class = {quotient.class_of(f): Fraction(v) for f, v in belief.items()}

        def lookup(f):
            try:
                return by_class[quotient.class_of(f)]
            except KeyError:
                raise ExpressionError(f"no belief value for the class of {f}") from None

        return lookup

    def lookup(f):
        try:
            return Fraction(belief[f])
        except KeyError:
            raise ExpressionError(f"no belief value for {f}") from None

    return lookup


def _evaluate(t, lookup) -> Fraction:
    if isinstance(t, Const):
        return t.value
    if isinstance(t, Atom):
        return lookup(t.formula)
    if isinstance(t, Sum):
        return _evaluate(t.left, lookup) + _evaluate(t.right, lookup)
    return _evaluate(t.left, lookup) * _evaluate(t.right, lookup)


def linear_form(t: FormalExpression, column: Callable) -> tuple[dict, Fraction]:
    """``t`` as ``(coefficients, constant)`` with coefficients keyed by
    ``column(formula)``.  Products of two non-constant terms are rejected."""
    if isinstance(t, Const):
        return {}, t.value
    if isinstance(t, Atom):
        return {column(t.formula): Fraction(1)}, Fraction(0)
    lc, lk = linear_form(t.left, column)
    rc, rk = linear_form(t.right, column)
    if isinstance(t, Sum):
        out = dict(lc)
        for k, v in rc.items():
            out[k] = out.get(k, 0) + v
        return {k: v for k, v in out.items() if v != 0}, lk + rk
    if lc and rc:
        raise ExpressionError("product of two non-constant terms is not linear")
    if not lc:
        lc, lk, rc, rk = rc, rk, lc, lk
    return {k: v * rk for k, v in lc.items() if v * rk != 0}, lk * rk


# -- text syntax --------------------------------------------------------------

RELATIONS = {"<=": "<=", "≤": "<=", ">=": ">=", "≥": ">=", "=": "="}


def _tokenize(text: str, spec):
    tokens = []  # (kind, value, pos)
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit() or (ch == "." and i + 1 < len(text) and text[i + 1].isdigit()):
            j = i
            while j < len(text) and (text[j].isdigit() or text[j] == "."):
                j += 1
            try:
                tokens.append(("num", Fraction(text[i:j]), i))
            except ValueError:
                raise ExpressionError(f"bad number {text[i:j]!r} at offset {i}") from None
            i = j
        elif ch == "B" and text[i + 1 :].lstrip().startswith("("):
            start = text.index("(", i)
            depth, j = 0, start
            while j < len(text):
                if text[j] == "(":
                    depth += 1
                elif text[j] == ")":
                    depth -= 1
                    if depth == 0:
                        break
                j += 1
            if depth:
                raise ExpressionError(f"unbalanced parentheses in B(...) at offset {i}")
            body = text[start + 1 : j]
            try:
                f = parse_formula(body, spec)
            except FormulaSyntaxError as exc:
                raise ExpressionError(f"in B({body}) at offset {start + 1 + exc.position}: {exc.reason}") from exc
            tokens.append(("atom", f, i))
            i = j + 1
        elif text.startswith(("<=", ">="), i):
            tokens.append(("rel", RELATIONS[text[i : i + 2]], i))
            i += 2
        elif ch in "≤≥=":
            tokens.append(("rel", RELATIONS[ch], i))
            i += 1
        elif ch in "+-*·/()":
            tokens.append((ch if ch != "·" else "*", ch, i))
            i += 1
        else:
            raise ExpressionError(f"unexpected {ch!r} at offset {i}")
    return tokens


class _ExprParser:
    def __init__(self, tokens, text):
        self.tokens = tokens
        self.text = text
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def take(self, kind):
        if self.peek() != kind:
            pos = self.tokens[self.i][2] if self.i < len(self.tokens) else len(self.text)
            raise ExpressionError(f"expected {kind!r} at offset {pos}")
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expr(self):
        t = self.term()
        while self.peek() in ("+", "-"):
            op = self.take(self.peek())[0]
            rhs = self.term()
            t = Sum(t, rhs if op == "+" else Product(Const(Fraction(-1)), rhs))
        return t

    def term(self):
        t = self.factor()
        while self.peek() == "*":
            self.take("*")
            t = Product(t, self.factor())
        return t

    def factor(self):
        kind = self.peek()
        if kind == "-":
            self.take("-")
            return Product(Const(Fraction(-1)), self.factor())
        if kind == "num":
            value = self.take("num")[1]
            if self.peek() == "/":
                self.take("/")
                denom = self.take("num")[1]
                if denom == 0:
                    raise ExpressionError("division by zero")
                value = value / denom
            return Const(value)
        if kind == "atom":
            return Atom(self.take("atom")[1])
        if kind == "(":
            self.take("(")
            t = self.expr()
            self.take(")")
            return t
        pos = self.tokens[self.i][2] if self.i < len(self.tokens) else len(self.text)
        raise ExpressionError(f"expected a term at offset {pos}")


def parse_expression(text: str, spec) -> FormalExpression:
    p = _ExprParser(_tokenize(text, spec), text)
    t = p.expr()
    if p.i != len(p.tokens):
        raise ExpressionError(f"trailing input at offset {p.tokens[p.i][2]}")
    return t


def parse_inequality(text: str, spec) -> FormalInequality:
    """Parse ``lhs REL rhs`` with REL one of ``<=``, ``>=``, ``=``."""
    tokens = _tokenize(text, spec)
    rels = [k for k, tok in enumerate(tokens) if tok[0] == "rel"]
    if len(rels) != 1:
        raise ExpressionError(f"expected exactly one relation in {text!r}")
    k = rels[0]
    left, right = _ExprParser(tokens[:k], text), _ExprParser(tokens[k + 1 :], text)
    lhs, rhs = left.expr(), right.expr()
    if left.i != len(left.tokens) or right.i != len(right.tokens):
        raise ExpressionError(f"trailing input in {text!r}")
    rel = tokens[k][1]
    if rel == ">=":
        return FormalInequality(rhs, lhs)
    return FormalInequality(lhs, rhs, equality=rel == "=")


def render_expression(t: FormalExpression, spec) -> str:
    if isinstance(t, Const):
        return str(t.value)
    if isinstance(t, Atom):
        return f"B({render_formula(t.formula, spec)})"
    if isinstance(t, Sum):
        return f"{render_expression(t.left, spec)} + {render_expression(t.right, spec)}"
    parts = []
    for side in (t.left, t.right):
        s = render_expression(side, spec)
        parts.append(f"({s})" if isinstance(side, Sum) else s)
    return "·".join(parts)
