import random

import pytest
from hypothesis import given, settings, strategies as st

from astgen import random_formula
from khtripos.errors import FormulaSyntaxError, UnknownSpace
from khtripos.logic import (And, Atom, Bottom, Comp, Eq, Exists, Forall, Iff, Implies, Lit,
                            Member, Not, Or, PowerSort, SpaceSort, Top, Var, parse,
                            parse_context, parse_sequent, show, tokenize)

p, q, r = Atom("p"), Atom("q"), Atom("r")
X = SpaceSort("X")


def test_forall_equality():
    assert parse("forall x : X . x = x") == Forall("x", X, Eq(Var("x"), Var("x")))


def test_and_binds_tighter_than_or():
    assert parse("p and q or r") == Or(And(p, q), r)
    assert parse("p or q and r") == Or(p, And(q, r))


def test_exists_over_power_sort():
    f = parse("exists s : P(X) . a in s")
    assert f == Exists("s", PowerSort(X), Member(Var("a"), Var("s")))


@pytest.mark.parametrize("text,tree", [
    ("not p and q", And(Not(p), q)),
    ("p implies q implies r", Implies(p, Implies(q, r))),
    ("p iff q iff r", Iff(Iff(p, q), r)),
    ("p or q implies r iff p", Iff(Implies(Or(p, q), r), p)),
    ("(p implies q) implies r", Implies(Implies(p, q), r)),
    ("not not p", Not(Not(p))),
    ("top and bottom", And(Top(), Bottom())),
])
def test_precedence_and_associativity(text, tree):
    assert parse(text) == tree


def test_quantifier_body_extends_right():
    f = parse("forall x : X . p and q")
    assert f == Forall("x", X, And(p, q))
    g = parse("(forall x : X . p) and q")
    assert g == And(Forall("x", X, p), q)
    h = parse("p and exists x : X . q or r")
    assert h == And(p, Exists("x", X, Or(q, r)))


def test_atoms_literals_and_comprehension():
    f = parse("r(x, 'u') and 'a' = y")
    assert f == And(Atom("r", (Var("x"), Lit("u"))), Eq(Lit("a"), Var("y")))
    g = parse("y in { x : X | p(x) }")
    assert g == Member(Var("y"), Comp("x", X, Atom("p", (Var("x"),))))


def test_unicode_aliases():
    ascii_ = parse("forall x : X . exists s : P(X) . x in s and not bottom implies top or p iff q")
    uni = parse("∀ x : X . ∃ s : P(X) . x ∈ s ∧ ¬ ⊥ → ⊤ ∨ p ↔ q")
    assert ascii_ == uni


def test_sequent_and_context():
    assert parse_sequent("p |- p or q") == (p, Or(p, q))
    assert parse_sequent("p ⊢ q") == (p, q)
    assert parse_context("x : X, s : P(P(X))") == [("x", X), ("s", PowerSort(PowerSort(X)))]
    assert parse_context("") == []


@pytest.mark.parametrize("text,line,column", [
    ("p and", 1, 6),
    ("p\n  and and q", 2, 7),
    ("forall x X . p", 1, 10),
    ("p # q", 1, 3),
    ("(p", 1, 3),
    ("p q", 1, 3),
    ("x", None, None),  # fine: a bare atom
])
def test_syntax_errors_carry_position(text, line, column):
    if line is None:
        parse(text)
        return
    with pytest.raises(FormulaSyntaxError) as err:
        parse(text)
    assert (err.value.line, err.value.column) == (line, column)
    assert f"line {line}, column {column}" in str(err.value)


def test_unknown_space():
    with pytest.raises(UnknownSpace):
        parse("forall x : W . top", spaces=["X"])
    with pytest.raises(UnknownSpace):
        parse_context("s : P(W)", spaces=["X"])
    parse("forall x : X . top", spaces=["X"])


def test_tokenizer_positions():
    toks = tokenize("p\n 'a b' = x")
    assert [(t.kind, t.text, t.line, t.column) for t in toks] == [
        ("name", "p", 1, 1), ("lit", "a b", 2, 2), ("sym", "=", 2, 8),
        ("name", "x", 2, 10), ("eof", "", 2, 11)]


def test_printer_is_minimal_on_simple_cases():
    assert show(parse("p and q or r")) == "p and q or r"
    assert show(parse("p implies (q implies r)")) == "p implies q implies r"
    assert show(parse("(p implies q) implies r")) == "(p implies q) implies r"
    assert show(parse("(forall x : X . p) and q")) == "(forall x : X . p) and q"


def test_round_trip_seeded():
    rng = random.Random(7)
    for _ in range(500):
        f = random_formula(rng)
        assert parse(show(f)) == f, show(f)


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=0, max_value=2 ** 32))
def test_round_trip_hypothesis(seed):
    f = random_formula(random.Random(seed), depth=5)
    assert parse(show(f)) == f
