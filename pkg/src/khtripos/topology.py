"""Finite topological spaces and continuous maps.

A finite topology is stored through the minimal open neighbourhood of each
point (the intersection of all opens containing it).  Opens are then exactly
the sets containing the neighbourhood of each of their points, so membership
tests and continuity checks are linear in the number of points, and the full
open family is only enumerated on request.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import prod
from typing import Iterable, Sequence

from .bitset import bits, compress, full_mask, is_subset
from .errors import DuplicateLabel, NotATopology, NotContinuous, SizeCap

DEFAULT_POINT_CAP = 4096


@dataclass(frozen=True, eq=False)
class FinSpace:
    name: str
    labels: tuple[str, ...]
    nbhd: tuple[int, ...]
    # spaces this one is the left-major product of; empty for non-products
    factors: tuple["FinSpace", ...] = field(default=(), repr=False)

    def __post_init__(self):
        if len(self.labels) != len(self.nbhd):
            raise ValueError("labels and neighbourhoods differ in length")
        object.__setattr__(
            self, "discrete", all(u == 1 << i for i, u in enumerate(self.nbhd))
        )

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FinSpace):
            return NotImplemented
        return (
            self.name == other.name
            and self.labels == other.labels
            and self.nbhd == other.nbhd
        )

    def __hash__(self):
        return hash((self.name, self.labels, self.nbhd))

    def __len__(self):
        return len(self.labels)

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        return full_mask(len(self.labels))

    def index(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise KeyError(f"no point {label!r} in space {self.name}") from None

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def is_open(self, mask: int) -> bool:
        if self.discrete:
            return is_subset(mask, self.full)
        return all(is_subset(self.nbhd[i], mask) for i in bits(mask))

    def is_closed(self, mask: int) -> bool:
        return self.is_open(self.full & ~mask)

    def is_clopen(self, mask: int) -> bool:
        return self.is_open(mask) and self.is_closed(mask)

    @cached_property
    def closure_of_point(self) -> tuple[int, ...]:
        """Smallest closed set containing each point."""
        cl = [0] * self.size
        for y, u in enumerate(self.nbhd):
            for x in bits(u):
                cl[x] |= 1 << y
        return tuple(cl)

    @cached_property
    def opens(self) -> tuple[int, ...]:
        """Every open set, sorted by bitset value."""
        family = {0}
        for u in set(self.nbhd):
            family |= {o | u for o in family}
        return tuple(sorted(family))

    def subset_labels(self, mask: int) -> list[str]:
        return [self.labels[i] for i in bits(mask)]

    def __repr__(self):
        return f"FinSpace({self.name!r}, {list(self.labels)})"


def _check_labels(points: Sequence) -> tuple[str, ...]:
    labels = tuple(str(p) for p in points)
    seen = set()
    for lab in labels:
        if lab in seen:
            raise DuplicateLabel(f"duplicate point label {lab!r}")
        seen.add(lab)
    return labels


def _as_mask(subset, labels: tuple[str, ...]) -> int:
    if isinstance(subset, int):
        return subset
    index = {lab: i for i, lab in enumerate(labels)}
    m = 0
    for p in subset:
        if isinstance(p, int) and not isinstance(p, bool):
            i = p
        elif p in index:
            i = index[p]
        else:
            raise ValueError(f"unknown point {p!r}")
        if not 0 <= i < len(labels):
            raise ValueError(f"point index {i} out of range")
        m |= 1 << i
    return m


def mk_space(points: Sequence, opens: Iterable, name: str = "X") -> FinSpace:
    """Build a space from an explicit open family, validating every axiom.

    Subsets may be given as iterables of point indices or labels.  The
    family is never completed: a missing union or intersection raises
    :class:`NotATopology` with the offending pair as witness.
    """
    labels = _check_labels(points)
    n = len(labels)
    family = sorted({_as_mask(s, labels) for s in opens})
    if any(m >> n for m in family):
        raise ValueError("open set refers to a point out of range")
    present = set(family)
    if 0 not in present:
        raise NotATopology("empty set is not open", {"axiom": "empty"})
    if full_mask(n) not in present:
        raise NotATopology("full set is not open", {"axiom": "full"})
    for a, b in combinations(family, 2):
        for axiom, c in (("union", a | b), ("intersection", a & b)):
            if c not in present:
                left, right = list(bits(a)), list(bits(b))
                raise NotATopology(
                    f"{axiom} of {left} and {right} is not open",
                    {"axiom": axiom, "left": left, "right": right},
                )
    nbhd = []
    for i in range(n):
        u = full_mask(n)
        for m in family:
            if m >> i & 1:
                u &= m
        nbhd.append(u)
    return FinSpace(name, labels, tuple(nbhd))


def discrete(points: Sequence, name: str = "X") -> FinSpace:
    labels = _check_labels(points)
    return FinSpace(name, labels, tuple(1 << i for i in range(len(labels))))


def from_neighbourhoods(points: Sequence, nbhd: Sequence[int], name: str = "X") -> FinSpace:
    """Build a space from minimal neighbourhoods (a preorder on the points)."""
    labels = _check_labels(points)
    nbhd = tuple(nbhd)
    for i, u in enumerate(nbhd):
        if not u >> i & 1 or any(not is_subset(nbhd[j], u) for j in bits(u)):
            raise NotATopology(f"neighbourhood of point {i} is not a minimal open set",
                               {"axiom": "neighbourhood", "point": i})
    return FinSpace(name, labels, nbhd)


ONE = discrete(["1"], name="1")
TWO = discrete(["0", "1"], name="2")
EMPTY = discrete([], name="0")


def is_discrete(X: FinSpace) -> bool:
    return X.discrete


def is_hausdorff(X: FinSpace) -> bool:
    """Distinct points have disjoint open neighbourhoods.

    Any open around x contains x's minimal neighbourhood, so it suffices to
    test the minimal ones pairwise.
    """
    return all(X.nbhd[x] & X.nbhd[y] == 0 for x, y in combinations(range(X.size), 2))


@dataclass(frozen=True, eq=False)
class ContMap:
    dom: FinSpace
    cod: FinSpace
    table: tuple[int, ...]
    name: str = ""

    def __post_init__(self):
        table = tuple(self.table)
        object.__setattr__(self, "table", table)
        if len(table) != self.dom.size:
            raise ValueError(
                f"map table has {len(table)} entries, domain {self.dom.name} has {self.dom.size} points"
            )
        if any(not 0 <= j < self.cod.size for j in table):
            raise ValueError(f"map table leaves codomain {self.cod.name}")
        if not self.dom.discrete:
            for x in range(self.dom.size):
                target = self.cod.nbhd[table[x]]
                if not is_subset(self.image(self.dom.nbhd[x]), target):
                    raise NotContinuous(
                        f"preimage of open {self.cod.subset_labels(target)} of "
                        f"{self.cod.name} is not open in {self.dom.name}",
                        open_set=target,
                    )

    def __eq__(self, other):
        if not isinstance(other, ContMap):
            return NotImplemented
        return self.dom == other.dom and self.cod == other.cod and self.table == other.table

    def __hash__(self):
        return hash((self.dom, self.cod, self.table))

    def __call__(self, i: int) -> int:
        return self.table[i]

    def __repr__(self):
        return f"ContMap({self.dom.name} -> {self.cod.name}, {list(self.table)})"

    @cached_property
    def fibres(self) -> tuple[int, ...]:
        fib = [0] * self.cod.size
        for i, j in enumerate(self.table):
            fib[j] |= 1 << i
        return tuple(fib)

    def preimage(self, mask: int) -> int:
        out = 0
        fib = self.fibres
        for j in bits(mask):
            out |= fib[j]
        return out

    def image(self, mask: int) -> int:
        out = 0
        t = self.table
        for i in bits(mask):
            out |= 1 << t[i]
        return out

    def then(self, g: "ContMap") -> "ContMap":
        """Diagrammatic composite: first self, then g."""
        if g.dom != self.cod:
            raise ValueError(f"cannot compose {self.cod.name} with {g.dom.name}")
        return ContMap(self.dom, g.cod, tuple(g.table[j] for j in self.table))

    @cached_property
    def is_clopen_map(self) -> bool:
        return is_open_map(self) and is_closed_map(self)


def identity(X: FinSpace) -> ContMap:
    return ContMap(X, X, tuple(range(X.size)), name=f"id_{X.name}")


def constant(X: FinSpace, Y: FinSpace, j: int) -> ContMap:
    return ContMap(X, Y, (j,) * X.size)


def to_terminal(X: FinSpace) -> ContMap:
    return ContMap(X, ONE, (0,) * X.size)


def is_open_map(f: ContMap) -> bool:
    # every open is a union of minimal neighbourhoods and images preserve unions
    return all(f.cod.is_open(f.image(u)) for u in f.dom.nbhd)


def is_closed_map(f: ContMap) -> bool:
    # every closed set is a union of point closures
    return all(f.cod.is_closed(f.image(c)) for c in f.dom.closure_of_point)


def _check_cap(n: int, cap: int, what: str):
    if n > cap:
        raise SizeCap(f"{what} would have {n} points (cap {cap})")


def product_many(spaces: Sequence[FinSpace], cap: int = DEFAULT_POINT_CAP,
                 name: str | None = None) -> tuple[FinSpace, list[ContMap]]:
    """Left-major product of any number of spaces with its projections.

    The empty product is the one-point space.
    """
    spaces = tuple(spaces)
    if not spaces:
        return ONE, []
    n = 1
    for S in spaces:
        n *= S.size
    _check_cap(n, cap, "product")
    labels: list[tuple[str, ...]] = [()]
    nbhd = [1]
    for S in spaces:
        m = S.size
        labels = [lab + (s,) for lab in labels for s in S.labels]
        new = []
        for u in nbhd:
            for v in S.nbhd:
                w = 0
                for i in bits(u):
                    w |= v << (i * m)
                new.append(w)
        nbhd = new
    if name is None:
        name = "×".join(S.name for S in spaces)
    text = [lab[0] if len(lab) == 1 else "(" + ",".join(lab) + ")" for lab in labels]
    P = FinSpace(name, tuple(text), tuple(nbhd), factors=spaces)
    projections = []
    for k, S in enumerate(spaces):
        stride = prod(T.size for T in spaces[k + 1:])
        table = tuple((i // stride) % S.size for i in range(n))
        projections.append(ContMap(P, S, table, name=f"π_{S.name}"))
    return P, projections


def product(X: FinSpace, Y: FinSpace, cap: int = DEFAULT_POINT_CAP,
            name: str | None = None) -> tuple[FinSpace, ContMap, ContMap]:
    """Binary product; point (x, y) has index ix * |Y| + iy."""
    P, (px, py) = product_many((X, Y), cap=cap, name=name)
    return P, px, py


def tuple_map(maps: Sequence[ContMap], target: FinSpace | None = None) -> ContMap:
    """The map z -> (f1(z), ..., fk(z)) into the left-major product of codomains."""
    maps = list(maps)
    if not maps:
        raise ValueError("tuple_map needs at least one component; use to_terminal")
    dom = maps[0].dom
    if any(f.dom != dom for f in maps):
        raise ValueError("components of a tuple map must share a domain")
    if target is None:
        target, _ = product_many([f.cod for f in maps])
    sizes = [f.cod.size for f in maps]
    table = []
    for z in range(dom.size):
        idx = 0
        for f, m in zip(maps, sizes):
            idx = idx * m + f.table[z]
        table.append(idx)
    return ContMap(dom, target, tuple(table))


def pairing(f: ContMap, g: ContMap, target: FinSpace | None = None) -> ContMap:
    return tuple_map([f, g], target)


def product_map(f: ContMap, g: ContMap, cap: int = DEFAULT_POINT_CAP) -> ContMap:
    """f × g : A × B -> C × D."""
    src, pa, pb = product(f.dom, g.dom, cap=cap)
    dst, _, _ = product(f.cod, g.cod, cap=cap)
    return pairing(pa.then(f), pb.then(g), target=dst)


def subspace(X: FinSpace, S: int | Iterable, name: str | None = None) -> tuple[FinSpace, ContMap]:
    """Subspace topology on S with its inclusion; points keep their order."""
    S = _as_mask(S, X.labels)
    if S >> X.size:
        raise ValueError("subset out of range")
    idx = list(bits(S))
    nbhd = tuple(compress(X.nbhd[i] & S, S) for i in idx)
    sub = FinSpace(name or f"{X.name}|{{{','.join(X.labels[i] for i in idx)}}}",
                   tuple(X.labels[i] for i in idx), nbhd)
    return sub, ContMap(sub, X, tuple(idx), name="incl")


@dataclass(frozen=True, eq=False)
class CompactificationTag:
    base: FinSpace
    space: FinSpace
    infinity_index: int

    def __post_init__(self):
        if not 0 <= self.infinity_index < self.space.size:
            raise ValueError("infinity is not a point of the compactification")
        if self.infinity_index < self.base.size:
            raise ValueError("infinity collides with a base point")


def _fresh_label(labels: tuple[str, ...], wanted: str) -> str:
    lab = wanted
    while lab in labels:
        lab += "'"
    return lab


def alexandroff(B: FinSpace, name: str | None = None
                ) -> tuple[FinSpace, ContMap, CompactificationTag]:
    """One-point compactification B ∪ {∞}.

    Opens are B's opens together with every V ∋ ∞ whose trace B \\ V is
    closed and compact in B.  Complements in a finite space are finite,
    hence compact, so the extra opens are {∞} ∪ O for O open in B.  That
    fixes every minimal neighbourhood: base points keep theirs and ∞ gets
    {∞}, since B itself is closed and compact.
    """
    n = B.size
    inf = n
    labels = B.labels + (_fresh_label(B.labels, "∞"),)
    nbhd = B.nbhd + (1 << inf,)
    space = FinSpace(name or f"{B.name}∞", labels, nbhd)
    inclusion = ContMap(B, space, tuple(range(n)), name="i")
    return space, inclusion, CompactificationTag(B, space, inf)


def opens_by_definition(B: FinSpace) -> list[int]:
    """Alexandroff opens enumerated straight from the definition.

    Exponential in |B|; used as an independent check on :func:`alexandroff`.
    """
    n = B.size
    out = set(B.opens)
    inf = 1 << n
    for rest in range(1 << n):
        complement = B.full & ~rest
        if B.is_closed(complement):  # finite, so also compact
            out.add(rest | inf)
    return sorted(out)


def all_functions(n: int, m: int):
    """All tables of maps from an n-point set to an m-point set, lexicographically."""
    from itertools import product as iproduct
    return iproduct(range(m), repeat=n)


def all_topologies(n: int) -> list[tuple[int, ...]]:
    """Minimal-neighbourhood tuples of every topology on n labelled points.

    Topologies on a finite set correspond to preorders; each reflexive
    relation is tested for transitivity.
    """
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    result = []
    for choice in range(1 << len(pairs)):
        up = [1 << i for i in range(n)]
        for k, (i, j) in enumerate(pairs):
            if choice >> k & 1:
                up[i] |= 1 << j
        if all(is_subset(up[j], up[i]) for i in range(n) for j in bits(up[i])):
            result.append(tuple(up))
    return result


__all__ = [
    "DEFAULT_POINT_CAP", "FinSpace", "ContMap", "CompactificationTag", "ONE", "TWO",
    "EMPTY", "mk_space", "discrete", "from_neighbourhoods", "is_discrete",
    "is_hausdorff", "is_open_map", "is_closed_map", "identity", "constant",
    "to_terminal", "product", "product_many", "product_map", "tuple_map",
    "pairing", "subspace", "alexandroff", "opens_by_definition",
    "all_functions", "all_topologies",
]
