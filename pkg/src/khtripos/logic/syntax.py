"""Abstract syntax of the predicate language and its pretty printer."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union


@dataclass(frozen=True)
class SpaceSort:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class PowerSort:
    elem: "Sort"

    def __str__(self):
        return f"P({self.elem})"


Sort = Union[SpaceSort, PowerSort]


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Lit:
    """A point literal; its space is inferred from where it is used."""

    label: str


@dataclass(frozen=True)
class Comp:
    var: str
    sort: Sort
    body: "Formula"


Term = Union[Var, Lit, Comp]


@dataclass(frozen=True)
class Top:
    pass


@dataclass(frozen=True)
class Bottom:
    pass


@dataclass(frozen=True)
class Atom:
    name: str
    args: tuple = ()


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Iff:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Forall:
    var: str
    sort: Sort
    body: "Formula"


@dataclass(frozen=True)
class Exists:
    var: str
    sort: Sort
    body: "Formula"


@dataclass(frozen=True)
class Member:
    elem: Term
    set: Term


@dataclass(frozen=True)
class Eq:
    left: Term
    right: Term


Formula = Union[Top, Bottom, Atom, Not, And, Or, Implies, Iff, Forall, Exists, Member, Eq]

BINARY = {And: "and", Or: "or", Implies: "implies", Iff: "iff"}
# binding strength; quantifiers bind loosest of all
PREC = {Iff: 1, Implies: 2, Or: 3, And: 4, Not: 5}
ATOMIC = 6


def _prec(f) -> int:
    if isinstance(f, (Forall, Exists)):
        return 0
    return PREC.get(type(f), ATOMIC)


def show_term(t: Term) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Lit):
        return f"'{t.label}'"
    if isinstance(t, Comp):
        return f"{{ {t.var} : {t.sort} | {show(t.body)} }}"
    raise TypeError(f"not a term: {t!r}")


def _wrap(f, ok: bool) -> str:
    s = show(f)
    return s if ok else f"({s})"


def show(f) -> str:
    """Render a formula so that parsing it gives back the same tree."""
    if isinstance(f, Top):
        return "top"
    if isinstance(f, Bottom):
        return "bottom"
    if isinstance(f, Atom):
        if not f.args:
            return f.name
        return f"{f.name}({', '.join(show_term(a) for a in f.args)})"
    if isinstance(f, Eq):
        return f"{show_term(f.left)} = {show_term(f.right)}"
    if isinstance(f, Member):
        return f"{show_term(f.elem)} in {show_term(f.set)}"
    if isinstance(f, Not):
        return "not " + _wrap(f.body, _prec(f.body) >= PREC[Not])
    if isinstance(f, (Forall, Exists)):
        q = "forall" if isinstance(f, Forall) else "exists"
        return f"{q} {f.var} : {f.sort} . {show(f.body)}"
    if type(f) in BINARY:
        p = PREC[type(f)]
        lp, rp = _prec(f.left), _prec(f.right)
        if isinstance(f, Implies):  # right associative
            left_ok, right_ok = lp > p, rp >= p
        else:
            left_ok, right_ok = lp >= p, rp > p
        return f"{_wrap(f.left, left_ok)} {BINARY[type(f)]} {_wrap(f.right, right_ok)}"
    raise TypeError(f"not a formula: {f!r}")
