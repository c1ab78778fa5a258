"""Engines that turn conjugate invariants into resolvent polynomials."""

from .ansatz import engine_ansatz, weighted_monomials
from .invariant_solve import (
    InvariantGenerator, ProductBasis, engine_invariant_solve, generators_from_table, table_consistency,
)
from .pairing import (
    PairingRelations, compute_v35, engine_sign_specialize, split_by_transposition, to_square_subring,
    v35_product_form, v35_square_image, vanishing_check,
)
from .report import EXACT_MATCH, FAILED, ORACLE_CONFIRMED, UNVERIFIED, ResolventReport
from .symmetric_engine import engine_symmetric
from .vieta import assemble, vieta_coefficients, vieta_expand
from .warmup import quartic, resolvent_cubic

__all__ = [
    "EXACT_MATCH", "FAILED", "InvariantGenerator", "ORACLE_CONFIRMED", "PairingRelations", "ProductBasis",
    "ResolventReport", "UNVERIFIED", "assemble", "compute_v35", "engine_ansatz", "engine_invariant_solve",
    "engine_sign_specialize", "engine_symmetric", "generators_from_table", "quartic", "resolvent_cubic",
    "split_by_transposition", "table_consistency", "to_square_subring", "v35_product_form",
    "v35_square_image", "vanishing_check", "vieta_coefficients", "vieta_expand", "weighted_monomials",
]
