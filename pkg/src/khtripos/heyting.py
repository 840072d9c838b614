"""Clopen predicates and the Boolean algebra clop(X)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .bitset import bits, is_subset
from .errors import NotClopen, SpaceMismatch
from .topology import FinSpace, _as_mask


@dataclass(frozen=True, eq=False)
class Predicate:
    """A clopen subset of ``space``."""

    space: FinSpace
    extent: int

    def __post_init__(self):
        X = self.space
        if self.extent < 0 or self.extent >> X.size:
            raise ValueError(f"extent out of range for space {X.name}")
        if not X.discrete and not X.is_clopen(self.extent):
            raise NotClopen(f"{X.subset_labels(self.extent)} is not clopen in {X.name}")

    def __eq__(self, other):
        if not isinstance(other, Predicate):
            return NotImplemented
        return self.extent == other.extent and self.space == other.space

    def __hash__(self):
        return hash((self.space, self.extent))

    def __repr__(self):
        return f"Predicate({self.space.name}, {self.space.subset_labels(self.extent)})"

    def __contains__(self, i: int) -> bool:
        return bool(self.extent >> i & 1)

    def points(self) -> list[int]:
        return list(bits(self.extent))

    def labels(self) -> list[str]:
        return self.space.subset_labels(self.extent)

    @property
    def is_top(self) -> bool:
        return self.extent == self.space.full

    @property
    def is_bottom(self) -> bool:
        return self.extent == 0

    def __and__(self, other):
        return meet(self, other)

    def __or__(self, other):
        return join(self, other)

    def __invert__(self):
        return neg(self)

    def __rshift__(self, other):
        return implies(self, other)

    def __le__(self, other):
        return leq(self, other)


def predicate(space: FinSpace, points: Iterable) -> Predicate:
    """Predicate from point indices or labels."""
    return Predicate(space, _as_mask(list(points), space.labels))


def _same(phi: Predicate, psi: Predicate) -> FinSpace:
    if phi.space is not psi.space and phi.space != psi.space:
        raise SpaceMismatch(f"{phi.space.name} vs {psi.space.name}")
    return phi.space


def top(X: FinSpace) -> Predicate:
    return Predicate(X, X.full)


def bottom(X: FinSpace) -> Predicate:
    return Predicate(X, 0)


def meet(phi: Predicate, psi: Predicate) -> Predicate:
    return Predicate(_same(phi, psi), phi.extent & psi.extent)


def join(phi: Predicate, psi: Predicate) -> Predicate:
    return Predicate(_same(phi, psi), phi.extent | psi.extent)


def neg(phi: Predicate) -> Predicate:
    return Predicate(phi.space, phi.space.full & ~phi.extent)


def implies(phi: Predicate, psi: Predicate) -> Predicate:
    # Boolean algebra: the residual of meet is ¬φ ∨ ψ
    X = _same(phi, psi)
    return Predicate(X, (X.full & ~phi.extent) | psi.extent)


def iff(phi: Predicate, psi: Predicate) -> Predicate:
    return meet(implies(phi, psi), implies(psi, phi))


def leq(phi: Predicate, psi: Predicate) -> bool:
    _same(phi, psi)
    return is_subset(phi.extent, psi.extent)


def clopen_masks(X: FinSpace) -> Iterator[int]:
    """Every clopen subset of X in increasing bitset order.

    A set is clopen iff it is a union of connected components of the
    specialisation preorder, so for discrete X this is all of range(2^n).
    """
    if X.discrete:
        yield from range(1 << X.size)
        return
    components = []
    seen = 0
    for x in range(X.size):
        if seen >> x & 1:
            continue
        comp, frontier = 0, 1 << x
        while frontier:
            comp |= frontier
            grow = 0
            for y in bits(frontier):
                grow |= X.nbhd[y] | X.closure_of_point[y]
            frontier = grow & ~comp
        components.append(comp)
        seen |= comp
    masks = [0]
    for c in components:
        masks += [m | c for m in masks]
    yield from sorted(masks)


@dataclass(frozen=True, eq=False)
class ClopenAlgebra:
    space: FinSpace

    @cached_property
    def carrier(self) -> tuple[Predicate, ...]:
        return tuple(Predicate(self.space, m) for m in clopen_masks(self.space))

    def __len__(self):
        return len(self.carrier)

    def __iter__(self):
        return iter(self.carrier)

    def __contains__(self, phi) -> bool:
        return (isinstance(phi, Predicate) and phi.space == self.space
                and self.space.is_clopen(phi.extent))

    @property
    def top(self) -> Predicate:
        return top(self.space)

    @property
    def bottom(self) -> Predicate:
        return bottom(self.space)


def clop_algebra(X: FinSpace) -> ClopenAlgebra:
    return ClopenAlgebra(X)
