"""A small higher-order predicate language interpreted in (KH, clop)."""

from .evaluate import Evaluator, SequentResult, eval_formula, eval_sequent
from .parser import parse, parse_context, parse_sequent, tokenize
from .syntax import (And, Atom, Bottom, Comp, Eq, Exists, Forall, Iff, Implies, Lit, Member,
                     Not, Or, PowerSort, SpaceSort, Top, Var, show, show_term)

__all__ = [
    "Evaluator", "SequentResult", "eval_formula", "eval_sequent", "parse", "parse_context",
    "parse_sequent", "tokenize", "show", "show_term", "And", "Atom", "Bottom", "Comp", "Eq",
    "Exists", "Forall", "Iff", "Implies", "Lit", "Member", "Not", "Or", "PowerSort",
    "SpaceSort", "Top", "Var",
]
