"""Finite model of the tripos of compact Hausdorff spaces and clopen predicates."""

from .heyting import (ClopenAlgebra, Predicate, bottom, clop_algebra, iff, implies, join, leq,
                      meet, neg, predicate, top)
from .power import (PowerObjectBundle, equality_predicate, evaluation_map, extend_infinity,
                    name, power_object, transpose, two_power)
from .topology import (ONE, TWO, CompactificationTag, ContMap, FinSpace, alexandroff,
                       discrete, identity, is_closed_map, is_hausdorff, is_open_map,
                       mk_space, product, subspace)
from .tripos import (AlgebraHom, PullbackSquare, beck_chevalley_square, char_function,
                     check_adjoint_chain, check_beck_chevalley, classifier_square,
                     exists_along, forall_along, inverse_image)

__version__ = "0.1.0"
