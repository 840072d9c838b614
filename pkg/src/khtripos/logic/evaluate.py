"""Typing and tripos semantics for formulas.

A context x1 : S1, ..., xk : Sk denotes the left-major product of the
spaces of its sorts, and a formula in that context denotes a clopen
predicate on it.  Variables are resolved by position (innermost binding
wins), and a bound variable always occupies the last factor, so both
quantifiers are taken along the projection that drops the last factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .. import tripos
from ..errors import FormulaTypeError, UnboundVariable, UnknownSpace
from ..heyting import Predicate, bottom, iff, implies, join, meet, neg, top
from ..model import ModelFile
from ..power import equality_predicate, name, power_object
from ..topology import (DEFAULT_POINT_CAP, ContMap, FinSpace, constant, pairing, product,
                        product_many, to_terminal, tuple_map)
from .syntax import (And, Atom, Bottom, Comp, Eq, Exists, Forall, Iff, Implies, Lit, Member,
                     Not, Or, PowerSort, Sort, SpaceSort, Top, Var)

Context = Sequence[tuple[str, Sort]]


def _lookup(ctx: Context, var: str) -> int:
    for i in range(len(ctx) - 1, -1, -1):
        if ctx[i][0] == var:
            return i
    raise UnboundVariable(f"unbound variable {var!r}")


class Evaluator:
    """Evaluates formulas against one model; caches the spaces it builds."""

    def __init__(self, model: ModelFile, cap: int = DEFAULT_POINT_CAP):
        self.model = model
        self.cap = cap
        self._contexts: dict[tuple, tuple[FinSpace, list[ContMap]]] = {}

    # typing

    def check_sort(self, sort: Sort):
        if isinstance(sort, PowerSort):
            return self.check_sort(sort.elem)
        if sort.name not in self.model.spaces:
            raise UnknownSpace(f"unknown space {sort.name!r}")

    def infer(self, t, ctx: Context, expected: Sort | None = None) -> Sort:
        """The sort of a term, checked against ``expected`` when given."""
        if isinstance(t, Var):
            sort = ctx[_lookup(ctx, t.name)][1]
        elif isinstance(t, Comp):
            self.check_sort(t.sort)
            self.check(t.body, list(ctx) + [(t.var, t.sort)])
            sort = PowerSort(t.sort)
        elif isinstance(t, Lit):
            if expected is None:
                raise FormulaTypeError(f"cannot infer the space of literal '{t.label}'")
            if not isinstance(expected, SpaceSort):
                raise FormulaTypeError(f"literal '{t.label}' used at power sort {expected}")
            self.check_sort(expected)
            if t.label not in self.model.spaces[expected.name].labels:
                raise FormulaTypeError(f"{expected.name} has no point '{t.label}'")
            return expected
        else:
            raise FormulaTypeError(f"not a term: {t!r}")
        if expected is not None and sort != expected:
            raise FormulaTypeError(f"term has sort {sort}, expected {expected}")
        return sort

    def check(self, f, ctx: Context):
        """Raise unless ``f`` is well scoped and well typed in ``ctx``."""
        if isinstance(f, (Top, Bottom)):
            return
        if isinstance(f, Not):
            return self.check(f.body, ctx)
        if isinstance(f, (And, Or, Implies, Iff)):
            self.check(f.left, ctx)
            return self.check(f.right, ctx)
        if isinstance(f, (Forall, Exists)):
            self.check_sort(f.sort)
            return self.check(f.body, list(ctx) + [(f.var, f.sort)])
        if isinstance(f, Atom):
            return self._check_atom(f, ctx)
        if isinstance(f, Eq):
            if isinstance(f.left, Lit):
                self.infer(f.left, ctx, self.infer(f.right, ctx))
            else:
                self.infer(f.right, ctx, self.infer(f.left, ctx))
            return
        if isinstance(f, Member):
            set_sort = self.infer(f.set, ctx)
            if not isinstance(set_sort, PowerSort):
                raise FormulaTypeError(f"right of 'in' has sort {set_sort}, not a power sort")
            self.infer(f.elem, ctx, set_sort.elem)
            return
        raise FormulaTypeError(f"not a formula: {f!r}")

    def _check_atom(self, f: Atom, ctx: Context):
        if f.name not in self.model.predicates:
            if not f.args and any(v == f.name for v, _ in ctx):
                raise FormulaTypeError(f"variable {f.name!r} used as a formula")
            raise FormulaTypeError(f"unknown predicate {f.name!r}")
        sorts = [SpaceSort(s) for s in self.model.predicate_sorts[f.name]]
        if f.args:
            if len(f.args) != len(sorts):
                raise FormulaTypeError(f"{f.name} takes {len(sorts)} arguments, "
                                       f"got {len(f.args)}")
            for a, s in zip(f.args, sorts):
                self.infer(a, ctx, s)
        elif sorts and [s for _, s in ctx] != sorts:
            raise FormulaTypeError(
                f"bare {f.name} is a predicate on {' × '.join(map(str, sorts))}, "
                f"but the context is {' × '.join(str(s) for _, s in ctx) or '1'}")

    # semantics

    def sort_space(self, sort: Sort) -> FinSpace:
        if isinstance(sort, PowerSort):
            return power_object(self.sort_space(sort.elem), self.cap).power
        try:
            return self.model.spaces[sort.name]
        except KeyError:
            raise UnknownSpace(f"unknown space {sort.name!r}") from None

    def context_space(self, ctx: Context) -> tuple[FinSpace, list[ContMap]]:
        key = tuple(s for _, s in ctx)
        if key not in self._contexts:
            self._contexts[key] = product_many([self.sort_space(s) for s in key], cap=self.cap)
        return self._contexts[key]

    def evaluate(self, f, ctx: Context = ()) -> Predicate:
        ctx = list(ctx)
        self.check(f, ctx)
        return self._eval(f, ctx)

    def _eval(self, f, ctx: list) -> Predicate:
        G, proj = self.context_space(ctx)
        if isinstance(f, Top):
            return top(G)
        if isinstance(f, Bottom):
            return bottom(G)
        if isinstance(f, Not):
            return neg(self._eval(f.body, ctx))
        if isinstance(f, (And, Or, Implies, Iff)):
            op = {And: meet, Or: join, Implies: implies, Iff: iff}[type(f)]
            return op(self._eval(f.left, ctx), self._eval(f.right, ctx))
        if isinstance(f, (Forall, Exists)):
            inner = ctx + [(f.var, f.sort)]
            body = self._eval(f.body, inner)
            drop = self._drop_last(inner)
            q = tripos.forall_along if isinstance(f, Forall) else tripos.exists_along
            return q(drop, body)
        if isinstance(f, Atom):
            p = self.model.predicates[f.name]
            if f.args:
                m = tuple_map([self._term(a, ctx, SpaceSort(s)) for a, s in
                               zip(f.args, self.model.predicate_sorts[f.name])], target=p.space)
            elif not self.model.predicate_sorts[f.name]:
                m = to_terminal(G)
            else:
                m = tuple_map(proj, target=p.space)
            return tripos.inverse_image(m)(p)
        if isinstance(f, Eq):
            if isinstance(f.left, Lit):
                sort = self.infer(f.right, ctx)
            else:
                sort = self.infer(f.left, ctx)
            delta = equality_predicate(self.sort_space(sort), self.cap)
            m = pairing(self._term(f.left, ctx, sort), self._term(f.right, ctx, sort),
                        target=delta.space)
            return tripos.inverse_image(m)(delta)
        if isinstance(f, Member):
            set_sort = self.infer(f.set, ctx)
            bundle = power_object(self.sort_space(set_sort.elem), self.cap)
            m = pairing(self._term(f.elem, ctx, set_sort.elem), self._term(f.set, ctx, set_sort),
                        target=bundle.membership.space)
            return tripos.inverse_image(m)(bundle.membership)
        raise FormulaTypeError(f"not a formula: {f!r}")

    def _drop_last(self, inner: list) -> ContMap:
        GS, _ = self.context_space(inner)
        G, _ = self.context_space(inner[:-1])
        m = self.sort_space(inner[-1][1]).size
        return ContMap(GS, G, tuple(i // m for i in range(GS.size)), name="drop")

    def _term(self, t, ctx: list, sort: Sort) -> ContMap:
        """The map from the context space to the space of ``sort`` that t denotes."""
        G, proj = self.context_space(ctx)
        if isinstance(t, Var):
            return proj[_lookup(ctx, t.name)]
        if isinstance(t, Lit):
            S = self.sort_space(sort)
            return constant(G, S, S.index(t.label))
        if isinstance(t, Comp):
            body = self._eval(t.body, ctx + [(t.var, t.sort)])
            S = self.sort_space(t.sort)
            # reorder G × S to S × G, the shape name() expects
            SG, ps, pg = product(S, G, cap=self.cap)
            swap = pairing(pg, ps, target=body.space)
            gamma = tripos.inverse_image(swap)(body)
            return name(gamma, power_object(S, self.cap), self.cap)
        raise FormulaTypeError(f"not a term: {t!r}")


def eval_formula(f, ctx: Context, model: ModelFile, cap: int = DEFAULT_POINT_CAP) -> Predicate:
    return Evaluator(model, cap).evaluate(f, ctx)


@dataclass(frozen=True)
class SequentResult:
    holds: bool
    counterexample: int | None = None
    label: str | None = None


def eval_sequent(lhs, rhs, ctx: Context, model: ModelFile,
                 cap: int = DEFAULT_POINT_CAP) -> SequentResult:
    """Whether lhs ≤ rhs in the context algebra, with the least failing point otherwise."""
    ev = Evaluator(model, cap)
    a, b = ev.evaluate(lhs, ctx), ev.evaluate(rhs, ctx)
    gap = a.extent & ~b.extent
    if not gap:
        return SequentResult(True)
    point = (gap & -gap).bit_length() - 1
    return SequentResult(False, point, a.space.labels[point])
