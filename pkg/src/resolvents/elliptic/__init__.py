"""Elliptic curves, division polynomials and the resolvent pipelines built on them."""

from .canned import octic_f, sextic_A
from .curve import (
    Curve, CurvePoint, curve_new, curve_normal_form, expand_discriminants, point_new, point_through,
    sample_points,
)
from .divpoly import (
    DivisionPolySequence, adopt_t4_convention, division_poly, divide_by_2y, gamma_n, mobius, reduce_y,
    torsion_field_poly,
)
from .pipelines import (
    INVARIANT_SCALES, V35_SIGN, Holq8Result, adelmann_pipeline, check_adelmann_table, holq8_pipeline,
    holq8_resolvent, v35_image,
)

__all__ = [
    "Curve", "CurvePoint", "DivisionPolySequence", "Holq8Result", "INVARIANT_SCALES", "V35_SIGN",
    "adelmann_pipeline", "adopt_t4_convention", "check_adelmann_table", "curve_new", "curve_normal_form",
    "divide_by_2y", "division_poly", "expand_discriminants", "gamma_n", "holq8_pipeline", "holq8_resolvent",
    "mobius", "octic_f", "point_new", "point_through", "reduce_y", "sample_points", "sextic_A",
    "torsion_field_poly", "v35_image",
]
