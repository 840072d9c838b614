"""Recursive-descent parser for formulas.

Grammar, loosest first::

    formula  := iff
    iff      := implies ('iff' implies)*            left associative
    implies  := or ('implies' implies)?             right associative
    or       := and ('or' and)*
    and      := unary ('and' unary)*
    unary    := 'not' unary | quant | primary
    quant    := ('forall' | 'exists') NAME ':' sort '.' formula
    primary  := 'top' | 'bottom' | '(' formula ')'
              | NAME '(' term (',' term)* ')' | term ('=' | 'in') term | NAME
    term     := NAME | 'label' | '{' NAME ':' sort '|' formula '}'
    sort     := NAME | 'P' '(' sort ')'

A quantifier body runs to the closest enclosing delimiter.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from ..errors import FormulaSyntaxError, UnknownSpace
from .syntax import (And, Atom, Bottom, Comp, Eq, Exists, Forall, Iff, Implies, Lit,
                     Member, Not, Or, PowerSort, SpaceSort, Top, Var)

KEYWORDS = {"forall", "exists", "and", "or", "not", "implies", "iff", "in", "top", "bottom"}
ALIASES = {
    "∀": "forall", "∃": "exists", "∧": "and", "∨": "or", "¬": "not",
    "→": "implies", "↔": "iff", "∈": "in", "⊤": "top", "⊥": "bottom", "⊢": "|-",
}

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<lit>'[^'\n]*')
  | (?P<turnstile>\|-)
  | (?P<sym>[(){}:.|,=])
  | (?P<alias>[∀∃∧∨¬→↔∈⊤⊥⊢])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str  # "name", "kw", "lit", "sym", "eof"
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        col = pos - line_start + 1
        if not m:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", line, col)
        kind, value = m.lastgroup, m.group()
        if kind == "ws":
            for k, ch in enumerate(value):
                if ch == "\n":
                    line += 1
                    line_start = pos + k + 1
        elif kind == "name":
            tokens.append(Token("kw" if value in KEYWORDS else "name", value, line, col))
        elif kind == "lit":
            tokens.append(Token("lit", value[1:-1], line, col))
        elif kind == "alias":
            word = ALIASES[value]
            tokens.append(Token("sym" if word == "|-" else "kw", word, line, col))
        else:
            tokens.append(Token("sym", value, line, col))
        pos = m.end()
    col = pos - line_start + 1
    tokens.append(Token("eof", "", line, col))
    return tokens


class Parser:
    def __init__(self, text: str, spaces: Iterable[str] | None = None):
        self.tokens = tokenize(text)
        self.pos = 0
        self.spaces = None if spaces is None else set(spaces)

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def error(self, message: str, tok: Token | None = None):
        tok = tok or self.tok
        return FormulaSyntaxError(message, tok.line, tok.column)

    def at(self, kind: str, text: str | None = None) -> bool:
        t = self.tok
        return t.kind == kind and (text is None or t.text == text)

    def accept(self, kind: str, text: str | None = None) -> Token | None:
        if self.at(kind, text):
            t = self.tok
            self.pos += 1
            return t
        return None

    def expect(self, kind: str, text: str | None = None) -> Token:
        t = self.accept(kind, text)
        if t is None:
            want = repr(text) if text else kind
            found = repr(self.tok.text) if self.tok.kind != "eof" else "end of input"
            raise self.error(f"expected {want}, found {found}")
        return t

    def finish(self):
        if not self.at("eof"):
            raise self.error(f"unexpected {self.tok.text!r}")

    # formulas

    def formula(self):
        left = self.implication()
        while self.accept("kw", "iff"):
            left = Iff(left, self.implication())
        return left

    def implication(self):
        left = self.disjunction()
        if self.accept("kw", "implies"):
            return Implies(left, self.implication())
        return left

    def disjunction(self):
        left = self.conjunction()
        while self.accept("kw", "or"):
            left = Or(left, self.conjunction())
        return left

    def conjunction(self):
        left = self.unary()
        while self.accept("kw", "and"):
            left = And(left, self.unary())
        return left

    def unary(self):
        if self.accept("kw", "not"):
            return Not(self.unary())
        for word, node in (("forall", Forall), ("exists", Exists)):
            if self.accept("kw", word):
                var, sort = self.binder()
                self.expect("sym", ".")
                return node(var, sort, self.formula())
        return self.primary()

    def binder(self):
        var = self.expect("name").text
        self.expect("sym", ":")
        return var, self.sort()

    def sort(self):
        t = self.expect("name")
        if t.text == "P" and self.accept("sym", "("):
            inner = self.sort()
            self.expect("sym", ")")
            return PowerSort(inner)
        if self.spaces is not None and t.text not in self.spaces:
            raise UnknownSpace(f"unknown space {t.text!r} at line {t.line}, column {t.column}")
        return SpaceSort(t.text)

    def primary(self):
        if self.accept("kw", "top"):
            return Top()
        if self.accept("kw", "bottom"):
            return Bottom()
        if self.accept("sym", "("):
            f = self.formula()
            self.expect("sym", ")")
            return f
        start = self.tok
        if start.kind == "name" and self.tokens[self.pos + 1].text == "(" \
                and self.tokens[self.pos + 1].kind == "sym":
            self.pos += 2
            args = [self.term()]
            while self.accept("sym", ","):
                args.append(self.term())
            self.expect("sym", ")")
            return Atom(start.text, tuple(args))
        left = self.term()
        if self.accept("sym", "="):
            return Eq(left, self.term())
        if self.accept("kw", "in"):
            return Member(left, self.term())
        if isinstance(left, Var):
            return Atom(left.name)
        raise self.error("expected '=' or 'in' after term")

    def term(self):
        if t := self.accept("name"):
            return Var(t.text)
        if t := self.accept("lit"):
            return Lit(t.text)
        if self.accept("sym", "{"):
            var, sort = self.binder()
            self.expect("sym", "|")
            body = self.formula()
            self.expect("sym", "}")
            return Comp(var, sort, body)
        found = repr(self.tok.text) if self.tok.kind != "eof" else "end of input"
        raise self.error(f"expected a term, found {found}")


def parse(text: str, spaces: Iterable[str] | None = None):
    """Parse a formula.  With ``spaces`` given, unknown sort names are rejected."""
    p = Parser(text, spaces)
    f = p.formula()
    p.finish()
    return f


def parse_sequent(text: str, spaces: Iterable[str] | None = None):
    """Parse ``φ |- ψ`` into the pair (φ, ψ)."""
    p = Parser(text, spaces)
    lhs = p.formula()
    p.expect("sym", "|-")
    rhs = p.formula()
    p.finish()
    return lhs, rhs


def parse_context(text: str, spaces: Iterable[str] | None = None) -> list:
    """Parse ``x : X, s : P(X)`` into [(name, sort), ...]."""
    p = Parser(text, spaces)
    out = []
    if p.at("eof"):
        return out
    while True:
        out.append(p.binder())
        if not p.accept("sym", ","):
            break
    p.finish()
    return out
