"""Brute-force reference computations on plain Python sets.

Nothing here touches the bitset machinery or the minimal-neighbourhood
representation of the package; spaces are (n, opens-as-frozensets).
"""

from itertools import chain, combinations, product


def powerset(points):
    points = list(points)
    return [frozenset(c) for c in chain.from_iterable(combinations(points, r)
                                                       for r in range(len(points) + 1))]


def is_topology(n, opens):
    opens = set(map(frozenset, opens))
    if frozenset() not in opens or frozenset(range(n)) not in opens:
        return False
    return all(a | b in opens and a & b in opens for a in opens for b in opens)


def all_topologies(n):
    """Every topology on range(n) by filtering all families of subsets."""
    subsets = powerset(range(n))
    inner = [s for s in subsets if 0 < len(s) < n]
    found = []
    for r in range(len(inner) + 1):
        for extra in combinations(inner, r):
            fam = {frozenset(), frozenset(range(n)), *extra}
            if is_topology(n, fam):
                found.append(frozenset(fam))
    return set(found)


def hausdorff(n, opens):
    opens = [frozenset(o) for o in opens]
    for x in range(n):
        for y in range(x + 1, n):
            if not any(x in u and y in v and not (u & v) for u in opens for v in opens):
                return False
    return True


def closed_sets(n, opens):
    return [frozenset(range(n)) - frozenset(o) for o in opens]


def image(table, s):
    return frozenset(table[i] for i in s)


def preimage(table, s):
    return frozenset(i for i, j in enumerate(table) if j in s)


def open_map(table, dom_opens, cod_opens):
    cod = set(map(frozenset, cod_opens))
    return all(image(table, o) in cod for o in dom_opens)


def closed_map(table, n_dom, dom_opens, n_cod, cod_opens):
    cod = set(closed_sets(n_cod, cod_opens))
    return all(image(table, c) in cod for c in closed_sets(n_dom, dom_opens))


def product_opens(nx, ox, ny, oy):
    """Unions of open rectangles, indexed left-major."""
    rects = [frozenset(x * ny + y for x in u for y in v) for u in ox for v in oy]
    fam = {frozenset()}
    for r in rects:
        fam |= {f | r for f in fam}
    return fam


def alexandroff_opens(n, opens):
    """Opens of B∞ (∞ = n): B's opens plus V ∋ ∞ with B \\ V closed (finite ⇒ compact)."""
    closed = set(closed_sets(n, opens))
    out = set(map(frozenset, opens))
    for v in powerset(range(n + 1)):
        if n in v and frozenset(range(n)) - v in closed:
            out.add(v)
    return out


def direct_image(table, phi):
    return image(table, phi)


def forall_fibres(table, n_cod, phi):
    """y belongs iff its whole fibre lies inside φ; empty fibres always belong."""
    return frozenset(y for y in range(n_cod)
                     if all(x in phi for x, t in enumerate(table) if t == y))


def residual(n, a, b):
    """Largest c with c ∩ a ⊆ b, found by searching all subsets."""
    best = frozenset()
    for c in powerset(range(n)):
        if c & a <= b and len(c) > len(best):
            best = c
    return best


def diagonal(n):
    return frozenset(i * n + i for i in range(n))


def to_set(mask):
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)
