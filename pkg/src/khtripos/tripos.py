"""The predicate functor clop with its quantifiers along clopen maps.

Inverse image gives the reindexing homomorphism; direct image is its left
adjoint and ¬Im¬ its right adjoint.  The checkers here walk every predicate
in canonical order, so the first failure reported is the least witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import NotAPullback, NotClopenMap, SpaceMismatch
from .heyting import ClopenAlgebra, Predicate, clop_algebra, implies, join, meet, neg
from .report import LawResult, extent_json, failed, map_json, passed
from .topology import (DEFAULT_POINT_CAP, ONE, TWO, ContMap, FinSpace, pairing,
                       product, subspace, to_terminal)


def _on(phi: Predicate, X: FinSpace, role: str):
    if phi.space is not X and phi.space != X:
        raise SpaceMismatch(f"predicate on {phi.space.name} given where {role} {X.name} expected")


@dataclass(frozen=True, eq=False)
class AlgebraHom:
    """clop(f) : clop(cod f) -> clop(dom f), φ ↦ f⁻¹[φ]."""

    map: ContMap

    @cached_property
    def source(self) -> ClopenAlgebra:
        return clop_algebra(self.map.cod)

    @cached_property
    def target(self) -> ClopenAlgebra:
        return clop_algebra(self.map.dom)

    def __call__(self, phi: Predicate) -> Predicate:
        _on(phi, self.map.cod, "codomain")
        return Predicate(self.map.dom, self.map.preimage(phi.extent))

    def check(self) -> LawResult:
        """Exhaustively confirm every Boolean operation is preserved."""
        law = "homomorphism"
        carrier = self.source.carrier
        n = 0
        for name, lhs, rhs in (("top", self(self.source.top), self.target.top),
                               ("bottom", self(self.source.bottom), self.target.bottom)):
            n += 1
            if lhs != rhs:
                return failed(law, {"map": map_json(self.map), "op": name})
        for phi in carrier:
            n += 1
            if self(neg(phi)) != neg(self(phi)):
                return failed(law, {"map": map_json(self.map), "op": "neg",
                                    "phi": extent_json(phi.extent)})
        for phi in carrier:
            for psi in carrier:
                for name, op in (("meet", meet), ("join", join), ("implies", implies)):
                    n += 1
                    if self(op(phi, psi)) != op(self(phi), self(psi)):
                        return failed(law, {"map": map_json(self.map), "op": name,
                                            "phi": extent_json(phi.extent),
                                            "psi": extent_json(psi.extent)})
        return passed(law, n)


def inverse_image(f: ContMap) -> AlgebraHom:
    return AlgebraHom(f)


def _require_clopen(f: ContMap):
    if not f.is_clopen_map:
        raise NotClopenMap(f"{f.dom.name} -> {f.cod.name} is not a clopen map")


def exists_along(f: ContMap, phi: Predicate) -> Predicate:
    """Left adjoint to inverse image: the direct image of φ."""
    _on(phi, f.dom, "domain")
    _require_clopen(f)
    return Predicate(f.cod, f.image(phi.extent))


def forall_along(f: ContMap, phi: Predicate) -> Predicate:
    """Right adjoint to inverse image, ¬ ∃_f ¬φ."""
    return neg(exists_along(f, neg(phi)))


def check_adjoint_chain(f: ContMap) -> LawResult:
    """∃_f ⊣ f⁻¹ ⊣ ∀_f, checked on every pair (φ on dom, ψ on cod)."""
    law = "adjoint_chain"
    pull = inverse_image(f)
    dom_preds = clop_algebra(f.dom).carrier
    cod_preds = clop_algebra(f.cod).carrier
    n = 0
    for phi in dom_preds:
        ex = exists_along(f, phi)
        fa = forall_along(f, phi)
        for psi in cod_preds:
            n += 1
            back = pull(psi)
            side = None
            if (ex <= psi) != (phi <= back):
                side = "exists"
            elif (back <= phi) != (psi <= fa):
                side = "forall"
            if side:
                return failed(law, {"adjoint": side, "map": map_json(f),
                                    "phi": extent_json(phi.extent),
                                    "psi": extent_json(psi.extent)}, n)
    return passed(law, n)


def check_functoriality(f: ContMap, g: ContMap) -> LawResult:
    """(f ; g)⁻¹ = f⁻¹ ∘ g⁻¹ on every predicate of cod g."""
    law = "functoriality"
    whole = inverse_image(f.then(g))
    pf, pg = inverse_image(f), inverse_image(g)
    n = 0
    for phi in clop_algebra(g.cod):
        n += 1
        if whole(phi) != pf(pg(phi)):
            return failed(law, {"f": map_json(f), "g": map_json(g),
                                "phi": extent_json(phi.extent)}, n)
    return passed(law, n)


@dataclass(frozen=True, eq=False)
class PullbackSquare:
    """A commutative square

        apex --top--> A
          |           |
        left        right
          v           v
          B --bottom-> C

    validated to be a pullback on construction.
    """

    apex: FinSpace
    top: ContMap
    left: ContMap
    right: ContMap
    bottom: ContMap

    def __post_init__(self):
        t, l, r, b = self.top, self.left, self.right, self.bottom
        if not (t.dom == self.apex and l.dom == self.apex and r.dom == t.cod
                and b.dom == l.cod and r.cod == b.cod):
            raise NotAPullback("square's maps do not fit together")
        for p in range(self.apex.size):
            if r(t(p)) != b(l(p)):
                raise NotAPullback(f"square does not commute at {self.apex.labels[p]}")
        fibre = [(a, c) for a in range(t.cod.size) for c in range(l.cod.size)
                 if r(a) == b(c)]
        comparison = sorted((t(p), l(p)) for p in range(self.apex.size))
        if comparison != fibre:
            raise NotAPullback("comparison map into the fibre product is not a bijection")


def beck_chevalley_square(X: FinSpace, k: ContMap, cap: int = DEFAULT_POINT_CAP) -> PullbackSquare:
    """The square X×Γ -> Γ, X×Γ -> X×Δ (id × k), X×Δ -> Δ, k : Γ -> Δ."""
    XG, px_g, p_g = product(X, k.dom, cap=cap)
    XD, _, p_d = product(X, k.cod, cap=cap)
    id_k = pairing(px_g, p_g.then(k), target=XD)
    return PullbackSquare(XG, p_g, id_k, k, p_d)


def check_beck_chevalley(square: PullbackSquare) -> LawResult:
    """∃_top ∘ left* = right* ∘ ∃_bottom and likewise for ∀, on every φ over B."""
    law = "beck_chevalley"
    left, right = inverse_image(square.left), inverse_image(square.right)
    n = 0
    for phi in clop_algebra(square.left.cod):
        n += 1
        pulled = left(phi)
        for side, q in (("exists", exists_along), ("forall", forall_along)):
            if q(square.top, pulled) != right(q(square.bottom, phi)):
                return failed(law, {"quantifier": side, "k": map_json(square.right),
                                    "X": square.apex.factors[0].name if square.apex.factors else None,
                                    "phi": extent_json(phi.extent)}, n)
    return passed(law, n)


def char_function(phi: Predicate) -> ContMap:
    """χ_φ : Y -> 2, continuous because φ is clopen."""
    Y = phi.space
    return ContMap(Y, TWO, tuple(phi.extent >> i & 1 for i in range(Y.size)), name="χ")


TRUE = ContMap(ONE, TWO, (1,), name="t")


def classifier_square(phi: Predicate) -> PullbackSquare:
    """φ -> 1 over Y -> 2: the subspace φ is the pullback of t along χ_φ."""
    sub, incl = subspace(phi.space, phi.extent)
    return PullbackSquare(sub, to_terminal(sub), incl, TRUE, char_function(phi))


__all__ = [
    "AlgebraHom", "PullbackSquare", "inverse_image", "exists_along", "forall_along",
    "check_adjoint_chain", "check_functoriality", "beck_chevalley_square",
    "check_beck_chevalley", "char_function", "classifier_square", "TRUE",
]
