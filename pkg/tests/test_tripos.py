from itertools import product as iproduct

import pytest

import oracles
from khtripos import tripos
from khtripos.errors import NotAPullback, NotClopenMap
from khtripos.heyting import Predicate, bottom, clop_algebra, predicate, top
from khtripos.topology import (ONE, ContMap, discrete, identity, product, to_terminal)
from khtripos.tripos import (PullbackSquare, beck_chevalley_square, char_function,
                             check_adjoint_chain, check_beck_chevalley, check_functoriality,
                             classifier_square, exists_along, forall_along, inverse_image)


def dsp(n, stem="D"):
    return discrete([str(i) for i in range(n)], name=f"{stem}{n}")


def maps(n, m):
    X, Y = dsp(n), dsp(m)
    for t in iproduct(range(m), repeat=n):
        yield ContMap(X, Y, t)


def all_small_maps(k=3):
    for n in range(k + 1):
        for m in range(k + 1):
            yield from maps(n, m)


@pytest.fixture
def pi_Y(X2, Y2):
    P, _, py = product(X2, Y2)
    return P, py


# inverse image

def test_inverse_image_identity_and_top(X2):
    h = inverse_image(identity(X2))
    for phi in clop_algebra(X2):
        assert h(phi) == phi
    f = ContMap(X2, X2, (1, 1))
    assert inverse_image(f)(top(X2)) == top(X2)


def test_inverse_image_of_collapsing_map(X2, Y2):
    f = ContMap(X2, Y2, (0, 0))
    h = inverse_image(f)
    assert h(predicate(Y2, ["u"])) == top(X2)
    assert h(predicate(Y2, ["v"])) == bottom(X2)


def test_homomorphism_check_passes_on_all_small_maps():
    for f in all_small_maps(2):
        assert inverse_image(f).check().ok


def test_homomorphism_on_map_out_of_sierpinski(sierpinski, X2):
    f = ContMap(sierpinski, X2, (0, 0))
    hom = inverse_image(f)
    assert hom.check().ok
    assert len(hom.target) == 2


def test_functoriality_exhaustive():
    for f in all_small_maps(2):
        for m in range(3):
            for g in maps(f.cod.size, m):
                assert check_functoriality(f, g).ok


# quantifiers

def test_exists_examples(pi_Y, X2):
    P, py = pi_Y
    assert exists_along(py, bottom(P)) == bottom(py.cod)
    assert exists_along(py, predicate(P, ["(a,u)"])) == predicate(py.cod, ["u"])
    phi = predicate(X2, ["b"])
    assert exists_along(identity(X2), phi) == phi


def test_forall_examples(pi_Y):
    P, py = pi_Y
    assert forall_along(py, top(P)) == top(py.cod)
    assert forall_along(py, predicate(P, ["(a,u)", "(b,u)"])) == predicate(py.cod, ["u"])
    assert forall_along(py, predicate(P, ["(a,u)"])) == bottom(py.cod)


def test_quantifiers_match_set_oracles():
    for f in all_small_maps(3):
        for phi in clop_algebra(f.dom):
            s = oracles.to_set(phi.extent)
            assert oracles.to_set(exists_along(f, phi).extent) == oracles.direct_image(f.table, s)
            assert oracles.to_set(forall_along(f, phi).extent) == \
                oracles.forall_fibres(f.table, f.cod.size, s)


def test_empty_fibres_are_universally_true():
    f = ContMap(dsp(1), dsp(3), (1,))
    assert forall_along(f, bottom(f.dom)).extent == 0b101


def test_not_clopen_map_rejected(sierpinski, X2):
    f = ContMap(X2, sierpinski, (0, 0))  # image {0} is not open
    with pytest.raises(NotClopenMap):
        exists_along(f, top(X2))
    with pytest.raises(NotClopenMap):
        forall_along(f, top(X2))


def test_adjoint_chain_identity_and_small_maps(X2):
    assert check_adjoint_chain(identity(X2)).ok
    for f in all_small_maps(3):
        r = check_adjoint_chain(f)
        assert r.ok, r.witness


@pytest.mark.parametrize("n", range(4))
def test_quantifiers_into_terminal(n):
    X = dsp(n)
    bang = to_terminal(X)
    assert check_adjoint_chain(bang).ok
    for phi in clop_algebra(X):
        assert exists_along(bang, phi).is_top == (phi.extent != 0)
        assert forall_along(bang, phi).is_top == (phi.extent == X.full)


def test_adjoint_chain_reports_broken_forall(monkeypatch):
    monkeypatch.setattr(tripos, "forall_along", tripos.exists_along)
    r = check_adjoint_chain(ContMap(dsp(0), dsp(1), ()))
    assert not r.ok
    assert r.witness == {"adjoint": "forall", "map": {"dom": "D0", "cod": "D1", "table": []},
                         "phi": [], "psi": [0]}


# pullbacks and Beck-Chevalley

def fibre_product(top_map, left_map, right_map, bottom_map):
    """Independent enumeration of {(a, b) : right(a) = bottom(b)}."""
    return sorted((a, b) for a in range(right_map.dom.size) for b in range(bottom_map.dom.size)
                  if right_map.table[a] == bottom_map.table[b])


def test_square_for_identity(X2):
    sq = beck_chevalley_square(X2, identity(X2))
    assert sq.apex.size == 4 and check_beck_chevalley(sq).ok


def test_square_over_terminal(X2, Y2):
    k = ContMap(X2, Y2, (1, 1))
    sq = beck_chevalley_square(ONE, k)
    assert sq.top.table == (0, 1) and sq.bottom.table == (0, 1)
    assert sq.left.table == k.table
    assert check_beck_chevalley(sq).ok


def test_square_from_point_into_two_points():
    X = discrete(["x1", "x2"], name="X")
    G = discrete(["g"], name="G")
    D = discrete(["d1", "d2"], name="D")
    k = ContMap(G, D, (0,))
    sq = beck_chevalley_square(X, k)
    assert sq.apex.size == 2 and sq.left.cod.size == 4
    pairs = sorted((sq.top(p), sq.left(p)) for p in range(sq.apex.size))
    assert pairs == fibre_product(sq.top, sq.left, sq.right, sq.bottom) == [(0, 0), (0, 2)]
    assert check_beck_chevalley(sq).ok


def test_beck_chevalley_with_empty_factor():
    k = ContMap(dsp(2), dsp(1), (0, 0))
    sq = beck_chevalley_square(dsp(0, "X"), k)
    assert sq.apex.size == 0 and check_beck_chevalley(sq).ok


def test_beck_chevalley_exhaustive_small():
    for x in range(3):
        X = dsp(x, "X")
        for k in all_small_maps(2):
            sq = beck_chevalley_square(X, k)
            assert fibre_product(sq.top, sq.left, sq.right, sq.bottom) == \
                sorted((sq.top(p), sq.left(p)) for p in range(sq.apex.size))
            assert check_beck_chevalley(sq).ok


def test_beck_chevalley_detects_bad_quantifier(monkeypatch):
    # forgets singletons, so it does not commute with reindexing
    def sloppy_exists(f, phi):
        m = phi.extent
        return Predicate(f.cod, 0 if m and m & (m - 1) == 0 else f.image(m))

    # ∀ is defined through ∃, so pin it to the set oracle to isolate the fault
    def honest_forall(f, phi):
        s = oracles.forall_fibres(f.table, f.cod.size, oracles.to_set(phi.extent))
        return Predicate(f.cod, sum(1 << i for i in s))

    monkeypatch.setattr(tripos, "exists_along", sloppy_exists)
    monkeypatch.setattr(tripos, "forall_along", honest_forall)
    k = ContMap(dsp(1), dsp(2), (0,))
    r = check_beck_chevalley(beck_chevalley_square(dsp(1, "X"), k))
    assert not r.ok and r.witness["quantifier"] == "exists" and r.witness["phi"] == [0, 1]


def test_non_pullback_rejected(X2):
    # X×X over X along two copies of the identity is not a pullback of id along id
    P, p1, p2 = product(X2, X2)
    with pytest.raises(NotAPullback):
        PullbackSquare(P, p1, p1, identity(X2), identity(X2))


# classifier

def test_char_function_examples(Y2):
    assert char_function(top(Y2)).table == (1, 1)
    assert char_function(bottom(Y2)).table == (0, 0)
    chi = char_function(predicate(Y2, ["u"]))
    assert chi.table == (1, 0)
    sq = classifier_square(predicate(Y2, ["u"]))
    assert sq.apex.labels == ("u",)
    assert fibre_product(sq.top, sq.left, sq.right, sq.bottom) == [(0, 0)]


def test_classifier_square_for_every_predicate():
    for n in range(4):
        for phi in clop_algebra(dsp(n)):
            sq = classifier_square(phi)
            assert sq.apex.size == bin(phi.extent).count("1")
            assert char_function(phi).preimage(0b10) == phi.extent


def test_classifier_on_non_discrete_space(sierpinski):
    for phi in clop_algebra(sierpinski):
        classifier_square(phi)
