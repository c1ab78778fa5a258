"""Small-degree permutation groups and their action on polynomials."""

from .action import (
    act_on_poly, canonical_set, conjugates_of_poly, is_invariant, orbit, orbit_sum, stabilizer_of_poly,
)
from .group import (
    Coset, PermGroup, group_closure, is_left_transversal, is_normal, is_right_transversal,
    left_transversal, normalizer, symmetric_group,
)
from .perm import Perm
from .quotient import (
    Quotient, find_isomorphism, is_isomorphic_to_s3, is_isomorphic_to_s4, quotient_isomorphic_to,
)

__all__ = [
    "Coset", "Perm", "PermGroup", "Quotient", "act_on_poly", "canonical_set", "conjugates_of_poly",
    "find_isomorphism", "group_closure", "is_invariant", "is_isomorphic_to_s3", "is_isomorphic_to_s4",
    "is_left_transversal", "is_normal", "is_right_transversal", "left_transversal", "normalizer",
    "orbit", "orbit_sum", "quotient_isomorphic_to", "stabilizer_of_poly", "symmetric_group",
]
