"""Propositional formulas over a logic's connectives: AST, parser, renderer.

The grammar is driven entirely by the connectives a logic declares.  Unary
connectives are prefix operators that bind tighter than every infix operator;
binary connectives are infix, ordered by their declared precedence and
associating to the left.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Union

__all__ = [
    "Letter",
    "Apply",
    "Formula",
    "HOLE",
    "FormulaSyntaxError",
    "parse_formula",
    "render_formula",
    "substitute",
    "letters_of",
]

IDENTIFIER = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*")
HOLE_NAME = "_"


@dataclass(frozen=True)
class Letter:
    name: str

    @property
    def size(self) -> int:
        return 1


@dataclass(frozen=True)
class Apply:
    connective: str
    args: tuple
    size: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))
        object.__setattr__(self, "size", 1 + sum(a.size for a in self.args))


Formula = Union[Letter, Apply]

#: The hole of a unary context such as ``~_``.
HOLE = Letter(HOLE_NAME)


class FormulaSyntaxError(ValueError):
    """A formula string could not be parsed.

    ``position`` is the character offset and ``token_index`` the 0-based index
    of the offending token (``None`` at end of input).
    """

    def __init__(self, message: str, position: int, token_index: int | None):
        self.reason = message
        self.position = position
        self.token_index = token_index
        where = f"token {token_index}" if token_index is not None else "end of input"
        super().__init__(f"{message} at {where} (offset {position})")


@dataclass(frozen=True)
class _Token:
    kind: str  # "letter", "op", "(", ")"
    text: str
    pos: int


def _tokenize(text: str, ops: list[str], allow_hole: bool) -> list[_Token]:
    ops = sorted(ops, key=len, reverse=True)
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "()":
            tokens.append(_Token(ch, ch, i))
            i += 1
            continue
        m = IDENTIFIER.match(text, i)
        if m:
            tokens.append(_Token("letter", m.group(), i))
            i = m.end()
            continue
        if allow_hole and ch == HOLE_NAME:
            tokens.append(_Token("letter", HOLE_NAME, i))
            i += 1
            continue
        for op in ops:
            if text.startswith(op, i):
                tokens.append(_Token("op", op, i))
                i += len(op)
                break
        else:
            raise FormulaSyntaxError(f"unknown token {text[i]!r}", i, len(tokens))
    return tokens


class _Parser:
    def __init__(self, text, spec, allow_hole):
        self.text = text
        self.unary = {c.name for c in spec.connectives if c.arity == 1}
        self.binary = {c.name: c.precedence for c in spec.connectives if c.arity == 2}
        self.tokens = _tokenize(text, list(self.unary | set(self.binary)), allow_hole)
        self.i = 0

    def error(self, message):
        if self.i < len(self.tokens):
            raise FormulaSyntaxError(message, self.tokens[self.i].pos, self.i)
        raise FormulaSyntaxError(message, len(self.text), None)

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def parse(self) -> Formula:
        if not self.tokens:
            self.error("empty formula")
        f = self.expression(0)
        tok = self.peek()
        if tok is not None:
            if tok.kind == ")":
                self.error("unbalanced parentheses")
            if tok.kind == "op" and tok.text in self.unary:
                self.error("arity/fixity misuse")
            self.error(f"unexpected {tok.text!r}")
        return f

    def expression(self, min_prec: int) -> Formula:
        left = self.operand()
        while True:
            tok = self.peek()
            if tok is None or tok.kind != "op" or tok.text not in self.binary:
                return left
            prec = self.binary[tok.text]
            if prec < min_prec:
                return left
            self.i += 1
            right = self.expression(prec + 1)
            left = Apply(tok.text, (left, right))

    def operand(self) -> Formula:
        tok = self.peek()
        if tok is None:
            self.error("missing operand")
        if tok.kind == "letter":
            self.i += 1
            return Letter(tok.text)
        if tok.kind == "(":
            self.i += 1
            inner = self.expression(0)
            if self.peek() is None or self.peek().kind != ")":
                self.error("unbalanced parentheses")
            self.i += 1
            return inner
        if tok.kind == "op" and tok.text in self.unary:
            self.i += 1
            return Apply(tok.text, (self.operand(),))
        if tok.kind == "op":
            self.error("arity/fixity misuse")
        self.error("unbalanced parentheses")


def parse_formula(text: str, spec, *, allow_hole: bool = False) -> Formula:
    """Parse ``text`` using the connectives declared by ``spec``.

    >>> parse_formula("~(p & q)", builtin_logic("classical"))  # doctest: +SKIP
    Apply(connective='~', args=(Apply(connective='&', args=(Letter(...), ...)),))

    With ``allow_hole`` the token ``_`` is accepted and parsed as :data:`HOLE`;
    this is how equivalence contexts are written.
    """
    return _Parser(text, spec, allow_hole).parse()


def render_formula(f: Formula, spec) -> str:
    """Render with the fewest parentheses that still parse back to ``f``."""
    prec = {c.name: c.precedence for c in spec.connectives if c.arity == 2}
    return _render(f, prec)


def _render(f, prec) -> str:
    if isinstance(f, Letter):
        return f.name
    if len(f.args) == 1:
        (arg,) = f.args
        inner = _render(arg, prec)
        if isinstance(arg, Apply) and len(arg.args) == 2:
            inner = f"({inner})"
        return f"{f.connective}{inner}"
    left, right = f.args
    p = prec[f.connective]
    ls, rs = _render(left, prec), _render(right, prec)
    if isinstance(left, Apply) and len(left.args) == 2 and prec[left.connective] < p:
        ls = f"({ls})"
    if isinstance(right, Apply) and len(right.args) == 2 and prec[right.connective] <= p:
        rs = f"({rs})"
    return f"{ls} {f.connective} {rs}"


def substitute(f: Formula, mapping: Mapping[str, Formula]) -> Formula:
    """Replace letters by formulas simultaneously."""
    if isinstance(f, Letter):
        return mapping.get(f.name, f)
    return Apply(f.connective, tuple(substitute(a, mapping) for a in f.args))


def _walk_letters(f: Formula) -> Iterator[str]:
    if isinstance(f, Letter):
        yield f.name
    else:
        for a in f.args:
            yield from _walk_letters(a)


def letters_of(f: Formula) -> tuple[str, ...]:
    """Letters of ``f`` in order of first occurrence."""
    return tuple(dict.fromkeys(_walk_letters(f)))
