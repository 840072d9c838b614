"""Small models built in code, plus the formula battery run against them."""

import random
from itertools import product as iproduct

from khtripos.model import model_from_dict

TAUTOLOGIES = [
    "forall x : X . p(x) or not p(x)",
    "forall x : X . ((p(x) implies q(x)) implies p(x)) implies p(x)",
    "(exists x : X . p(x)) iff not forall x : X . not p(x)",
    "(forall x : X . p(x)) iff not exists x : X . not p(x)",
    "forall x : X . not (p(x) and q(x)) iff not p(x) or not q(x)",
    "(exists y : Y . forall x : X . r(x, y)) implies forall x : X . exists y : Y . r(x, y)",
    "forall x : X . x = x",
    "forall x : X . forall y : X . x = y implies y = x",
    "forall x : X . forall y : X . x = y and p(x) implies p(y)",
    "forall y : X . y in { x : X | p(x) } iff p(y)",
    "forall y : X . forall z : Y . y in { x : X | r(x, z) } iff r(y, z)",
    "forall s : P(X) . exists t : P(X) . forall x : X . x in t iff not x in s",
]


def model(x_labels, y_labels, p=(), q=(), r=()):
    return model_from_dict({
        "spaces": [{"name": "X", "points": list(x_labels)},
                   {"name": "Y", "points": list(y_labels)}],
        "predicates": [
            {"name": "p", "space": "X", "extent": list(p)},
            {"name": "q", "space": "X", "extent": list(q)},
            {"name": "r", "space": ["X", "Y"], "extent": [list(t) for t in r]},
        ],
    })


def random_model(rng: random.Random, max_size: int = 4):
    xs = [f"x{i}" for i in range(rng.randint(0, max_size))]
    ys = [f"y{i}" for i in range(rng.randint(0, max_size))]

    def some(items):
        return [i for i in items if rng.random() < 0.5]

    return model(xs, ys, some(xs), some(xs), some(list(iproduct(xs, ys))))


def subsets(items):
    items = list(items)
    for mask in range(1 << len(items)):
        yield [v for i, v in enumerate(items) if mask >> i & 1]
