"""Weak power objects PA = (2^A)_∞ and the equality predicate they induce.

A point of 2^A is a map A -> 2 stored as a bitmask (bit i is the value at
point i), so the points of 2^A are 0 .. 2^|A| - 1 in that order and ∞ is
appended as the last point of PA.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .bitset import bits
from .errors import NotDiscreteBase, SizeCap, SpaceMismatch, VerificationFailed
from .heyting import Predicate, iff
from .topology import (DEFAULT_POINT_CAP, TWO, CompactificationTag, ContMap, FinSpace,
                       alexandroff, discrete, pairing, product, product_many)
from .tripos import forall_along, inverse_image


def _require_discrete(A: FinSpace):
    if not A.discrete:
        raise NotDiscreteBase(f"{A.name} is not discrete, so not compact Hausdorff")


def _subset_label(A: FinSpace, mask: int) -> str:
    return "{" + ",".join(A.labels[i] for i in bits(mask)) + "}"


def _power_size(A: FinSpace, cap: int) -> int:
    if A.size >= cap.bit_length():
        raise SizeCap(f"2^{A.size} points exceed the cap {cap}")
    n = 1 << A.size
    if n > cap:
        raise SizeCap(f"2^{A.size} points exceed the cap {cap}")
    return n


def compact_open_topology(A: FinSpace, cap: int = DEFAULT_POINT_CAP) -> FinSpace:
    """2^A with the topology generated by the sets C(K, U) = {f : f[K] ⊆ U}.

    K ranges over the compact subsets of A (all of them, A being finite) and
    U over the opens of 2.  In a finite space the minimal neighbourhood of f
    is the intersection of the subbasic sets containing it.
    """
    _require_discrete(A)
    n = _power_size(A, cap)
    full = (1 << A.size) - 1
    everything = (1 << n) - 1
    nbhd = [everything] * n
    for K in range(1 << A.size):
        for U in TWO.opens:
            sub = 0
            for f in range(n):
                hit = (1 if (~f & full & K) else 0) | (2 if (f & K) else 0)
                if hit & ~U == 0:
                    sub |= 1 << f
            for f in bits(sub):
                nbhd[f] &= sub
    return FinSpace(f"2^{A.name}", tuple(_subset_label(A, f) for f in range(n)), tuple(nbhd))


def two_power(A: FinSpace, cap: int = DEFAULT_POINT_CAP, verify: bool = False) -> FinSpace:
    """The exponential 2^A; discrete, points in bitmask order.

    With ``verify`` the compact-open topology is recomputed and every
    singleton {f} = C(f⁻¹{1}, {1}) ∩ C(f⁻¹{0}, {0}) is confirmed open.
    """
    _require_discrete(A)
    n = _power_size(A, cap)
    space = discrete([_subset_label(A, f) for f in range(n)], name=f"2^{A.name}")
    if verify:
        co = compact_open_topology(A, cap)
        if not co.discrete:
            bad = next(f for f in range(n) if co.nbhd[f] != 1 << f)
            raise VerificationFailed(f"compact-open topology on 2^{A.name} is not "
                                     f"discrete at {space.labels[bad]}")
    return space


def evaluation_map(A: FinSpace, cap: int = DEFAULT_POINT_CAP) -> ContMap:
    """ev : A × 2^A -> 2, (a, f) ↦ f(a)."""
    F = two_power(A, cap)
    P, _, _ = product(A, F, cap=cap)
    m = F.size
    table = tuple((f >> a) & 1 for a in range(A.size) for f in range(m))
    return ContMap(P, TWO, table, name="ev")


def _factors(phi: Predicate) -> tuple[FinSpace, FinSpace]:
    fs = phi.space.factors
    if len(fs) != 2:
        raise SpaceMismatch(f"{phi.space.name} is not a binary product")
    return fs


def transpose(phi: Predicate, cap: int = DEFAULT_POINT_CAP) -> ContMap:
    """The exponential transpose B -> 2^A of χ_φ for φ on A × B."""
    A, B = _factors(phi)
    _require_discrete(A)
    _require_discrete(B)
    F = two_power(A, cap)
    nb = B.size
    table = []
    for b in range(nb):
        mask = 0
        for a in range(A.size):
            if phi.extent >> (a * nb + b) & 1:
                mask |= 1 << a
        table.append(mask)
    return ContMap(B, F, tuple(table), name="χ̄")


def extend_infinity(f: ContMap, tag: CompactificationTag,
                    cap: int = DEFAULT_POINT_CAP) -> ContMap:
    """f_∞ : A × B_∞ -> 2, equal to f on A × B and 0 on A × {∞}."""
    if f.cod != TWO or len(f.dom.factors) != 2:
        raise SpaceMismatch("extend_infinity needs a map A × B -> 2")
    A, B = f.dom.factors
    if B != tag.base:
        raise SpaceMismatch(f"tag compactifies {tag.base.name}, map uses {B.name}")
    P, _, _ = product(A, tag.space, cap=cap)
    nb, nbi = B.size, tag.space.size
    table = []
    for a in range(A.size):
        for b in range(nbi):
            table.append(0 if b == tag.infinity_index else f(a * nb + b))
    return ContMap(P, TWO, tuple(table), name="ev∞")


@dataclass(frozen=True, eq=False)
class PowerObjectBundle:
    base: FinSpace
    function_space: FinSpace
    power: FinSpace
    tag: CompactificationTag
    inclusion: ContMap  # 2^A -> PA
    ev: ContMap
    ev_infinity: ContMap
    membership: Predicate  # on A × PA

    @property
    def infinity(self) -> int:
        return self.tag.infinity_index

    def point_of(self, phi: Predicate) -> int:
        """The PA-point indexing a clopen of A."""
        if phi.space != self.base:
            raise SpaceMismatch(f"{phi.space.name} is not {self.base.name}")
        return phi.extent

    def predicate_of(self, point: int) -> Predicate:
        if point == self.infinity:
            raise ValueError("∞ indexes no predicate")
        return Predicate(self.base, point)

    def point_json(self, point: int) -> dict:
        if point == self.infinity:
            return {"infinity": True}
        return {"mask": point}


@lru_cache(maxsize=64)
def power_object(A: FinSpace, cap: int = DEFAULT_POINT_CAP) -> PowerObjectBundle:
    _require_discrete(A)
    F = two_power(A, cap)
    if (F.size + 1) * max(A.size, 1) > cap:
        raise SizeCap(f"{A.name} × P{A.name} exceeds the cap {cap}")
    PA, incl, tag = alexandroff(F, name=f"P({A.name})")
    ev = evaluation_map(A, cap)
    ev_inf = extend_infinity(ev, tag, cap)
    membership = Predicate(ev_inf.dom, ev_inf.preimage(1 << 1))
    return PowerObjectBundle(A, F, PA, tag, incl, ev, ev_inf, membership)


def name(gamma: Predicate, bundle: PowerObjectBundle | None = None,
         cap: int = DEFAULT_POINT_CAP) -> ContMap:
    """{γ} = i ∘ χ̄_γ : Y -> PX for γ on X × Y."""
    X, _ = _factors(gamma)
    bundle = bundle or power_object(X, cap)
    if bundle.base != X:
        raise SpaceMismatch(f"bundle is for {bundle.base.name}, γ lives over {X.name}")
    return transpose(gamma, cap).then(bundle.inclusion)


@lru_cache(maxsize=64)
def equality_predicate(X: FinSpace, cap: int = DEFAULT_POINT_CAP) -> Predicate:
    """δ_X = ∀_{⟨π1,π2⟩}(⟨π1,π3⟩*∈ ↔ ⟨π2,π3⟩*∈) on X × X."""
    bundle = power_object(X, cap)
    mem = bundle.membership
    _, (p1, p2, p3) = product_many([X, X, bundle.power], cap=cap)
    XX, _, _ = product(X, X, cap=cap)
    left = inverse_image(pairing(p1, p3, target=mem.space))(mem)
    right = inverse_image(pairing(p2, p3, target=mem.space))(mem)
    return forall_along(pairing(p1, p2, target=XX), iff(left, right))
