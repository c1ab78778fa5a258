"""Exact rational arithmetic and sparse multivariate polynomials."""

from fractions import Fraction as BigRat

from .linalg import solve_rational
from .parse import P, parse_poly
from .poly import MultiPoly, as_rational, exact_div, format_poly, sum_polys, term_order_key, var_key
from .resultant import bareiss_det, discriminant_nonzero, resultant, sylvester_matrix
from .symmetric import elem_sym, elementary_to_roots, is_symmetric, root_names, symmetric_reduce
from .weights import CURVE_WEIGHTS, WeightSystem, homogeneous_weight, weighted_components


def poly_arith(p, q, op: str):
    """Dispatch ``add``/``sub``/``mul``/``pow``; for ``pow`` the second operand is an int."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "pow":
        return p ** q
    raise ValueError(f"unknown operation {op!r}")


def substitute(p: MultiPoly, bindings) -> MultiPoly:
    return p.substitute(bindings)


def evaluate_rational(p: MultiPoly, point) -> BigRat:
    return BigRat(p.evaluate(point))


__all__ = [
    "BigRat", "MultiPoly", "P", "WeightSystem", "CURVE_WEIGHTS",
    "as_rational", "bareiss_det", "discriminant_nonzero", "elem_sym", "elementary_to_roots",
    "evaluate_rational", "exact_div", "format_poly", "homogeneous_weight", "is_symmetric",
    "parse_poly", "poly_arith", "resultant", "root_names", "solve_rational", "substitute",
    "sum_polys", "sylvester_matrix", "symmetric_reduce", "term_order_key", "var_key", "weighted_components",
]
