"""Numeric reconstruction of resolvents from labeled roots."""

from __future__ import annotations

import json
from fractions import Fraction
from dataclasses import dataclass, field

import mpmath

from ..errors import NoLabelingMatches
from ..permgroup import act_on_poly
from ..polyring import MultiPoly
from .labeling import RootLabeling, all_relabelings, pair_respecting_relabelings
from .precision import ComplexAP, default_precision
from .roots import coefficient_list

ACCEPTANCE_TOLERANCE = mpmath.mpf("1e-20")


def _mp(c):
    if isinstance(c, Fraction):
        return mpmath.mpf(c.numerator) / c.denominator
    return mpmath.mpmathify(c)


def sample_invariant(inv: MultiPoly, labeling: RootLabeling, prefix: str = "x") -> ComplexAP:
    """Numeric value of ``inv`` at the labeled roots, with a rounding-error estimate."""
    prec = mpmath.mp.prec
    point = labeling.point(prefix)
    value = inv.evaluate_with(point, _mp)
    scale = sum(abs(_mp(c)) for c in inv.terms.values()) * max(1, max(abs(v) for v in point.values())) ** max(
        inv.degree(), 0)
    return ComplexAP(mpmath.mpc(value), scale * mpmath.ldexp(1, -prec + 4), prec)


def numeric_resolvent(invariant: MultiPoly, transversal, labeling: RootLabeling, prefix: str = "x",
                      shift=0) -> list:
    """Coefficients, leading first, of ``prod(X - (rep(invariant) - shift))`` at the labeled roots."""
    point = labeling.point(prefix)
    values = [act_on_poly(g, invariant, prefix).evaluate_with(point, _mp) - _mp(shift) for g in transversal]
    coeffs = [mpmath.mpc(1)]
    for v in values:
        coeffs = [a - v * b for a, b in zip(coeffs + [0], [0] + coeffs)]
    return coeffs


def coefficient_deviation(symbolic: list, numeric: list):
    return max(abs(_mp(s) - n) for s, n in zip(symbolic, numeric))


@dataclass
class OracleReport:
    curve: dict
    precision_bits: int
    max_residual: object
    matched_labeling: list | None
    max_coeff_deviation: object
    passed: bool
    notes: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "curve": {k: str(v) for k, v in self.curve.items()},
            "precision_bits": self.precision_bits,
            "max_residual": mpmath.nstr(self.max_residual, 6),
            "matched_labeling": self.matched_labeling,
            "max_coeff_deviation": mpmath.nstr(self.max_coeff_deviation, 6),
            "pass": self.passed,
            "notes": list(self.notes),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)


def _labeling_indices(base: RootLabeling, other: RootLabeling) -> list:
    index = {id(v): i for i, v in enumerate(base.values, 1)}
    return [index.get(id(v)) for v in other.values]


def verify_resolvent(symbolic: MultiPoly, invariant: MultiPoly, transversal, labeling: RootLabeling,
                     var: str | None = None, tolerance=ACCEPTANCE_TOLERANCE, search: str = "auto",
                     curve: dict | None = None, max_residual=0, prefix: str = "x", shift=0) -> OracleReport:
    """Compare a specialized resolvent with the one built from numeric roots.

    On mismatch every relabeling in the search space is tried: pair-respecting
    ones for a paired labeling, all of them otherwise.  ``shift`` moves every
    numeric conjugate down, for resolvents reported after ``Y -> Y + shift``.
    """
    sym = coefficient_list(symbolic, var)
    deviations = []

    def attempt(lab):
        dev = coefficient_deviation(sym, numeric_resolvent(invariant, transversal, lab, prefix, shift))
        deviations.append(dev)
        return dev

    dev = attempt(labeling)
    matched = labeling if dev < tolerance else None
    if matched is None and search != "none":
        if search == "pairs" or (search == "auto" and labeling.scheme):
            candidates = pair_respecting_relabelings(labeling)
        else:
            candidates = all_relabelings(labeling)
        for lab in candidates:
            if attempt(lab) < tolerance:
                matched = lab
                break
    report = OracleReport(
        curve=dict(curve or {}),
        precision_bits=mpmath.mp.prec,
        max_residual=max_residual,
        matched_labeling=_labeling_indices(labeling, matched) if matched is not None else None,
        max_coeff_deviation=min(deviations),
        passed=matched is not None,
    )
    if matched is None:
        raise NoLabelingMatches(f"no labeling reproduces the resolvent (best deviation "
                                f"{mpmath.nstr(min(deviations), 5)})", min(deviations))
    return report


def precision_context(bits: int | None = None):
    return mpmath.workprec(bits or default_precision())
