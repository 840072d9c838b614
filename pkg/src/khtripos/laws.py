"""Law suites over generated and model-supplied instances.

Each suite returns one :class:`LawResult`.  Instances are walked in a fixed
order (sizes ascending, maps and predicates in table/bitset order), so the
first failure is the least witness.  Random instances come from a seeded
``random.Random`` and are only used past the exhaustive size.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fnmatch import fnmatch
from typing import Callable, Iterator

from . import tripos
from .bitset import bits, is_subset
from .errors import NotAPullback, SizeCap, TriposError
from .heyting import Predicate, clop_algebra, clopen_masks, iff, implies, join, meet, neg
from .model import ModelFile
from .power import (equality_predicate, extend_infinity, name, power_object, transpose,
                    two_power)
from .report import LawResult, extent_json, failed, map_json, merge, passed, space_json
from .topology import (ContMap, FinSpace, all_functions, all_topologies, alexandroff,
                       discrete, from_neighbourhoods, identity, is_closed_map, is_hausdorff,
                       is_open_map, opens_by_definition, product, product_map, subspace)


@dataclass(frozen=True)
class CheckOptions:
    max_size: int = 4
    seed: int = 0
    verify_compact_open: bool = False
    exhaustive_size: int = 3
    random_instances: int = 20

    @property
    def exhaustive(self) -> int:
        return min(self.exhaustive_size, self.max_size)


def dspace(n: int, stem: str = "D") -> FinSpace:
    """The discrete space on points 0..n-1, named by its size."""
    return discrete([str(i) for i in range(n)], name=f"{stem}{n}")


def all_maps(n: int, m: int) -> Iterator[ContMap]:
    X, Y = dspace(n), dspace(m)
    for table in all_functions(n, m):
        yield ContMap(X, Y, table)


def maps_up_to(size: int) -> Iterator[ContMap]:
    for n in range(size + 1):
        for m in range(size + 1):
            yield from all_maps(n, m)


def topologies_up_to(size: int) -> Iterator[FinSpace]:
    for n in range(size + 1):
        for k, nbhd in enumerate(all_topologies(n)):
            yield from_neighbourhoods([str(i) for i in range(n)], nbhd, name=f"T{n}_{k}")


def random_map(rng: random.Random, max_size: int, min_size: int = 0) -> ContMap:
    n, m = rng.randint(min_size, max_size), rng.randint(1, max_size)
    return ContMap(dspace(n), dspace(m),
                   tuple(rng.randrange(m) for _ in range(n)))


def model_clopen_maps(model: ModelFile | None) -> list[ContMap]:
    if model is None:
        return []
    return [f for _, f in sorted(model.maps.items()) if f.is_clopen_map]


def model_spaces(model: ModelFile | None) -> list[FinSpace]:
    if model is None:
        return []
    return [X for _, X in sorted(model.spaces.items())]


def _sample(rng: random.Random, space: FinSpace, k: int) -> list[Predicate]:
    if space.size <= 8:
        return list(clop_algebra(space))
    return [Predicate(space, rng.getrandbits(space.size)) for _ in range(k)] if space.discrete \
        else list(clop_algebra(space))[:k]


# Boolean algebra

_AXIOMS: list[tuple[str, Callable]] = [
    ("meet_assoc", lambda a, b, c: meet(meet(a, b), c) == meet(a, meet(b, c))),
    ("join_assoc", lambda a, b, c: join(join(a, b), c) == join(a, join(b, c))),
    ("meet_comm", lambda a, b, c: meet(a, b) == meet(b, a)),
    ("join_comm", lambda a, b, c: join(a, b) == join(b, a)),
    ("absorption", lambda a, b, c: meet(a, join(a, b)) == a and join(a, meet(a, b)) == a),
    ("distributivity", lambda a, b, c: meet(a, join(b, c)) == join(meet(a, b), meet(a, c))
     and join(a, meet(b, c)) == meet(join(a, b), join(a, c))),
    ("complement", lambda a, b, c: meet(a, neg(a)).is_bottom and join(a, neg(a)).is_top),
    ("residuation", lambda a, b, c: (c <= implies(a, b)) == (meet(c, a) <= b)),
    ("iff", lambda a, b, c: iff(a, b) == meet(implies(a, b), implies(b, a))),
]


def check_boolean_algebra(X: FinSpace, rng: random.Random | None = None, limit: int = 16) -> LawResult:
    law = "boolean_algebra"
    carrier = list(clop_algebra(X)) if X.size <= 12 else None
    if carrier is not None and len(carrier) <= limit:
        triples = ((a, b, c) for a in carrier for b in carrier for c in carrier)
    else:
        rng = rng or random.Random(0)
        pool = _sample(rng, X, 64)
        triples = ((rng.choice(pool), rng.choice(pool), rng.choice(pool)) for _ in range(500))
    n = 0
    for a, b, c in triples:
        n += 1
        for axiom, holds in _AXIOMS:
            if not holds(a, b, c):
                return failed(law, {"axiom": axiom, "space": space_json(X),
                                    "phi": extent_json(a.extent), "psi": extent_json(b.extent),
                                    "chi": extent_json(c.extent)}, n)
    return passed(law, n)


def law_boolean_algebra(model, opts: CheckOptions) -> LawResult:
    rng = random.Random(opts.seed)
    spaces = list(topologies_up_to(min(opts.max_size, 4))) + model_spaces(model)
    return merge("boolean_algebra", (check_boolean_algebra(X, rng) for X in spaces))


# functor and adjoints

def law_homomorphism(model, opts: CheckOptions) -> LawResult:
    rng = random.Random(opts.seed)
    maps = list(maps_up_to(opts.exhaustive))
    if model is not None:
        maps += [f for _, f in sorted(model.maps.items())]
    maps += [random_map(rng, opts.max_size) for _ in range(opts.random_instances)]
    return merge("homomorphism", (tripos.inverse_image(f).check() for f in maps))


def law_functoriality(model, opts: CheckOptions) -> LawResult:
    law = "functoriality"

    def results():
        size = opts.exhaustive
        for n in range(size + 1):
            X = dspace(n)
            ident = tripos.inverse_image(identity(X))
            for phi in clop_algebra(X):
                if ident(phi) != phi:
                    yield failed(law, {"identity": space_json(X), "phi": extent_json(phi.extent)})
                    return
            yield passed(law, 1 << n)
        for b in range(size + 1):
            for a in range(size + 1):
                for f in all_maps(a, b):
                    for c in range(size + 1):
                        for g in all_maps(b, c):
                            yield tripos.check_functoriality(f, g)
        if model is not None:
            ms = [f for _, f in sorted(model.maps.items())]
            for f in ms:
                for g in ms:
                    if f.cod == g.dom:
                        yield tripos.check_functoriality(f, g)

    return merge(law, results())


def law_adjoint_chain(model, opts: CheckOptions) -> LawResult:
    rng = random.Random(opts.seed)

    def results():
        for f in maps_up_to(opts.exhaustive):
            yield tripos.check_adjoint_chain(f)
        for f in model_clopen_maps(model):
            yield tripos.check_adjoint_chain(f)
        for _ in range(opts.random_instances):
            yield tripos.check_adjoint_chain(random_map(rng, opts.max_size))

    return merge("adjoint_chain", results())


def _bc_sampled(square, rng: random.Random, k: int) -> LawResult:
    B = square.left.cod
    left, right = tripos.inverse_image(square.left), tripos.inverse_image(square.right)
    masks = sorted({rng.getrandbits(B.size) if B.size else 0 for _ in range(k)})
    for n, m in enumerate(masks, 1):
        phi = Predicate(B, m)
        for side, q in (("exists", tripos.exists_along), ("forall", tripos.forall_along)):
            if q(square.top, left(phi)) != right(q(square.bottom, phi)):
                return failed("beck_chevalley", {"quantifier": side, "k": map_json(square.right),
                                                 "phi": extent_json(m)}, n)
    return passed("beck_chevalley", len(masks))


def law_beck_chevalley(model, opts: CheckOptions) -> LawResult:
    rng = random.Random(opts.seed)

    def results():
        size = opts.exhaustive
        for x in range(size + 1):
            X = dspace(x, "X")
            for k in maps_up_to(size):
                yield tripos.check_beck_chevalley(tripos.beck_chevalley_square(X, k))
        for k in model_clopen_maps(model):
            for x in range(3):
                X = dspace(x, "X")
                try:
                    square = tripos.beck_chevalley_square(X, k)
                except SizeCap:
                    continue
                yield _bc_sampled(square, rng, 256)
        for _ in range(opts.random_instances):
            X = dspace(rng.randint(0, opts.max_size), "X")
            k = random_map(rng, opts.max_size)
            yield _bc_sampled(tripos.beck_chevalley_square(X, k), rng, 256)

    return merge("beck_chevalley", results())


def law_classifier_pullback(model, opts: CheckOptions) -> LawResult:
    law = "classifier_pullback"
    preds: list[Predicate] = []
    for n in range(opts.exhaustive + 1):
        preds += list(clop_algebra(dspace(n)))
    for X in topologies_up_to(min(opts.max_size, 3)):
        if not X.discrete:
            preds += list(clop_algebra(X))
    if model is not None:
        preds += [p for _, p in sorted(model.predicates.items())]
    for count, phi in enumerate(preds, 1):
        try:
            chi = tripos.char_function(phi)
            tripos.classifier_square(phi)
        except NotAPullback as exc:
            return failed(law, {"space": space_json(phi.space), "phi": extent_json(phi.extent),
                                "error": str(exc)}, count)
        if chi.preimage(0b10) != phi.extent:
            return failed(law, {"space": space_json(phi.space), "phi": extent_json(phi.extent),
                                "error": "χ⁻¹{1} differs from φ"}, count)
    return passed(law, len(preds))


# power objects

def check_beta(X: FinSpace, Y: FinSpace) -> LawResult:
    """(id × {γ})⁻¹(∈) = γ and ev ∘ (id × χ̄_γ) = χ_γ for every γ on X × Y."""
    law = "weak_power_object"
    bundle = power_object(X)
    XY, _, _ = product(X, Y)
    idX = identity(X)
    n = 0
    for gamma in clop_algebra(XY):
        n += 1
        named = name(gamma, bundle)
        if named.image(Y.full) >> bundle.infinity & 1:
            return failed(law, {"X": space_json(X), "Y": space_json(Y), "gamma":
                                extent_json(gamma.extent), "error": "name hits ∞"}, n)
        pulled = tripos.inverse_image(product_map(idX, named))(bundle.membership)
        if pulled.extent != gamma.extent:
            return failed(law, {"X": space_json(X), "Y": space_json(Y),
                                "gamma": extent_json(gamma.extent),
                                "pulled_back": extent_json(pulled.extent)}, n)
        composite = product_map(idX, transpose(gamma)).then(bundle.ev)
        if composite.preimage(0b10) != gamma.extent:
            return failed(law, {"X": space_json(X), "Y": space_json(Y),
                                "gamma": extent_json(gamma.extent), "error": "transpose"}, n)
    return passed(law, n)


def law_weak_power_object(model, opts: CheckOptions) -> LawResult:
    def results():
        size = opts.exhaustive
        for x in range(size + 1):
            for y in range(size + 1):
                yield check_beta(dspace(x, "X"), dspace(y, "Y"))
        for X in model_spaces(model):
            for Y in model_spaces(model):
                if X.discrete and Y.discrete and X.size * Y.size <= 9:
                    yield check_beta(X, Y)

    return merge("weak_power_object", results())


def diagonal(X: FinSpace) -> int:
    n = X.size
    return sum(1 << (i * n + i) for i in range(n))


def law_delta_diagonal(model, opts: CheckOptions) -> LawResult:
    law = "delta_diagonal"
    # sizes past 6 would push X × X × PX over the default point cap
    spaces = [dspace(n, "X") for n in range(min(max(opts.max_size, 4), 6) + 1)]
    spaces += [X for X in model_spaces(model) if X.discrete and X.size <= 6]
    for count, X in enumerate(spaces, 1):
        delta = equality_predicate(X)
        if delta.extent != diagonal(X):
            return failed(law, {"space": space_json(X), "delta": extent_json(delta.extent),
                                "diagonal": extent_json(diagonal(X))}, count)
    return passed(law, len(spaces))


def law_power_shape(model, opts: CheckOptions) -> LawResult:
    law = "power_shape"
    n = 0
    for size in range(min(opts.max_size, 4) + 1):
        A = dspace(size, "A")
        n += 1
        F = two_power(A, verify=opts.verify_compact_open and size <= 3)
        b = power_object(A)
        inf = b.infinity
        problems = []
        if F.size != 2 ** size or not F.discrete:
            problems.append("|2^A| or discreteness")
        if b.power.size != 2 ** size + 1 or not b.power.discrete:
            problems.append("|PA| or discreteness")
        if not b.power.is_open(1 << inf):
            problems.append("{∞} not open")
        if any(b.membership.extent >> (a * b.power.size + inf) & 1 for a in range(size)):
            problems.append("∞ is a member")
        ev, ev_inf = b.ev, b.ev_infinity
        lifted = product_map(identity(A), b.inclusion)
        if lifted.image(ev.preimage(0b10)) != ev_inf.preimage(0b10):
            problems.append("f∞⁻¹{1} ≠ i[f⁻¹{1}]")
        if lifted.then(ev_inf).table != ev.table:
            problems.append("f∞ does not extend f")
        if any(b.predicate_of(p).extent != p or b.point_of(b.predicate_of(p)) != p
               for p in range(F.size)):
            problems.append("index is not a bijection")
        if problems:
            return failed(law, {"space": space_json(A), "problems": problems}, n)
    return passed(law, n)


# topology

def check_topology_lemmas(X: FinSpace) -> list[str]:
    problems = []
    if is_hausdorff(X) != X.discrete:
        problems.append("hausdorff ⇔ discrete")
    if is_hausdorff(X):
        for S in range(1 << X.size):
            if not is_hausdorff(subspace(X, S)[0]):
                problems.append("subspace of Hausdorff space is Hausdorff")
                break
    return problems


def check_compactification(B: FinSpace) -> list[str]:
    problems = []
    Binf, incl, tag = alexandroff(B)
    if list(Binf.opens) != opens_by_definition(B):
        problems.append("opens match the definition")
    if not is_open_map(incl):
        problems.append("inclusion is open")
    if not Binf.is_open(1 << tag.infinity_index):
        problems.append("{∞} is open")
    if is_hausdorff(Binf) != is_hausdorff(B):
        problems.append("B∞ Hausdorff ⇔ B Hausdorff")
    return problems


def law_topology_lemmas(model, opts: CheckOptions) -> LawResult:
    law = "topology_lemmas"
    n = 0
    for X in list(topologies_up_to(min(opts.max_size, 4))) + model_spaces(model):
        n += 1
        problems = check_topology_lemmas(X)
        if problems:
            return failed(law, {"space": space_json(X), "nbhd": list(X.nbhd),
                                "problems": problems}, n)
    size = opts.exhaustive
    for a in range(size + 1):
        for b in range(size + 1):
            n += 1
            _, px, py = product(dspace(a, "X"), dspace(b, "Y"))
            for p in (px, py):
                if not (is_open_map(p) and is_closed_map(p)):
                    return failed(law, {"projection": map_json(p),
                                        "problems": ["projection is clopen"]}, n)
    return passed(law, n)


def law_compactification(model, opts: CheckOptions) -> LawResult:
    law = "compactification"
    n = 0
    for B in list(topologies_up_to(min(opts.max_size, 4))) + \
            [X for X in model_spaces(model) if X.size <= 12]:
        n += 1
        problems = check_compactification(B)
        if problems:
            return failed(law, {"space": space_json(B), "nbhd": list(B.nbhd),
                                "problems": problems}, n)
    return passed(law, n)


LAWS: dict[str, Callable[[ModelFile | None, CheckOptions], LawResult]] = {
    "adjoint_chain": law_adjoint_chain,
    "beck_chevalley": law_beck_chevalley,
    "boolean_algebra": law_boolean_algebra,
    "classifier_pullback": law_classifier_pullback,
    "compactification": law_compactification,
    "delta_diagonal": law_delta_diagonal,
    "functoriality": law_functoriality,
    "homomorphism": law_homomorphism,
    "power_shape": law_power_shape,
    "topology_lemmas": law_topology_lemmas,
    "weak_power_object": law_weak_power_object,
}


def select(patterns: list[str] | None) -> list[str]:
    if not patterns:
        return sorted(LAWS)
    return sorted(k for k in LAWS if any(fnmatch(k, p) or p in k for p in patterns))


def run_laws(model: ModelFile | None, opts: CheckOptions,
             patterns: list[str] | None = None) -> list[LawResult]:
    results = []
    for law in select(patterns):
        try:
            results.append(LAWS[law](model, opts))
        except TriposError as exc:
            results.append(failed(law, {"error": f"{type(exc).__name__}: {exc}"}))
    return sorted(results, key=lambda r: r.law)
