"""High-precision numeric cross-checks of the exact pipelines."""

from .labeling import (
    OCTIC_PAIRS, RootLabeling, all_relabelings, label_roots, pair_by_negation, pair_respecting_relabelings,
)
from .precision import DEFAULT_PRECISION_BITS, ENV_VAR, ComplexAP, default_precision
from .roots import coefficient_list, find_roots, max_residual
from .verify import (
    ACCEPTANCE_TOLERANCE, OracleReport, coefficient_deviation, numeric_resolvent, precision_context,
    sample_invariant, verify_resolvent,
)

__all__ = [
    "ACCEPTANCE_TOLERANCE", "ComplexAP", "DEFAULT_PRECISION_BITS", "ENV_VAR", "OCTIC_PAIRS", "OracleReport",
    "RootLabeling", "all_relabelings", "coefficient_deviation", "coefficient_list", "default_precision",
    "find_roots", "label_roots", "max_residual", "numeric_resolvent", "pair_by_negation",
    "pair_respecting_relabelings", "precision_context", "sample_invariant", "verify_resolvent",
]
