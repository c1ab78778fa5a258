"""Weighted-homogeneous interpolation of a coefficient from sampled values."""

from __future__ import annotations

from fractions import Fraction

import mpmath

from ..errors import InconsistentSystem, NonIntegralFit, Underdetermined
from ..polyring import MultiPoly, WeightSystem, solve_rational

HOLDOUT = 3
MIN_EXTRA_SAMPLES = 5


def weighted_monomials(weight: int, ws: WeightSystem, variables, max_exponents=None) -> list:
    """Exponent dicts over ``variables`` of total weight ``weight``, respecting per-variable caps."""
    variables = list(variables)
    caps = dict(max_exponents or {})
    out = []

    def rec(i, remaining, acc):
        if i == len(variables):
            if remaining == 0:
                out.append(dict(acc))
            return
        v = variables[i]
        wv = ws[v]
        top = remaining // wv
        if v in caps:
            top = min(top, caps[v])
        for k in range(top + 1):
            acc[v] = k
            rec(i + 1, remaining - k * wv, acc)
        acc.pop(v, None)

    rec(0, weight, {})
    return out


def _value(mono: dict, point) -> object:
    out = 1
    for v, k in mono.items():
        if k:
            out = out * point[v] ** k
    return out


def _is_exact(x) -> bool:
    return isinstance(x, (int, Fraction))


def engine_ansatz(target_weight: int, ws: WeightSystem, samples, variables=("a", "b", "z", "w"),
                  max_exponents=None, tolerance: float = 1e-20) -> MultiPoly:
    """Fit integer coefficients of a weighted-homogeneous polynomial through ``samples``.

    ``samples`` are ``(point, value)`` pairs, ``point`` mapping each variable to a
    rational.  Values may be exact rationals or mpmath numbers.  The last three
    samples are held out and must be reproduced.
    """
    samples = list(samples)
    basis = weighted_monomials(target_weight, ws, variables, max_exponents)
    if len(samples) < len(basis) + MIN_EXTRA_SAMPLES:
        raise Underdetermined(f"{len(basis)} unknowns need at least {len(basis) + MIN_EXTRA_SAMPLES} samples, "
                              f"got {len(samples)}")
    fit, held = samples[:-HOLDOUT], samples[-HOLDOUT:]
    rows = [[_value(m, pt) for m in basis] for pt, _ in fit]
    rhs = [val for _, val in fit]

    if all(_is_exact(v) for v in rhs):
        try:
            coeffs, rank = solve_rational(rows, rhs)
        except InconsistentSystem:
            raise NonIntegralFit("exact samples admit no fit at this weight") from None
        if rank < len(basis):
            raise Underdetermined(f"sample matrix has rank {rank} < {len(basis)}")
        if any(isinstance(c, Fraction) and c.denominator != 1 for c in coeffs):
            raise NonIntegralFit("fit has non-integral coefficients")
        coeffs = [int(c) for c in coeffs]
    else:
        coeffs = _numeric_fit(rows, rhs, len(basis), tolerance)

    poly = MultiPoly.const(0)
    for c, m in zip(coeffs, basis):
        if c:
            poly = poly + MultiPoly.monomial(c, m)
    for pt, val in held:
        got = poly.evaluate(pt)
        if _is_exact(val):
            if got != val:
                raise NonIntegralFit("fit does not reproduce a held-out sample")
        elif abs(_to_mpf(got) - val) > tolerance * max(1, abs(val)):
            raise NonIntegralFit("fit does not reproduce a held-out sample")
    return poly


def _to_mpf(c):
    if isinstance(c, Fraction):
        return mpmath.mpf(c.numerator) / c.denominator
    return mpmath.re(mpmath.mpmathify(c))


def _numeric_fit(rows, rhs, n, tolerance) -> list:
    A = mpmath.matrix([[_to_mpf(c) for c in row] for row in rows])
    b = mpmath.matrix([_to_mpf(v) for v in rhs])
    # column scaling keeps the normal equations well conditioned
    scale = [max(abs(A[i, j]) for i in range(A.rows)) or mpmath.mpf(1) for j in range(n)]
    for j in range(n):
        if scale[j] == 0:
            raise Underdetermined("a basis monomial vanishes on every sample")
        for i in range(A.rows):
            A[i, j] /= scale[j]
    # lu_solve does least squares for tall systems; qr_solve breaks on zero pivots
    x = mpmath.lu_solve(A, b)
    coeffs = []
    for j in range(n):
        c = x[j] / scale[j]
        k = int(mpmath.nint(c))
        if abs(c - k) > mpmath.mpf(tolerance) * max(1, abs(c)):
            raise NonIntegralFit(f"coefficient {mpmath.nstr(c, 30)} is not an integer")
        coeffs.append(k)
    return coeffs
