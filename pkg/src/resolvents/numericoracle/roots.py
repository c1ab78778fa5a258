"""All complex roots of a univariate polynomial by Aberth-Ehrlich iteration."""

from __future__ import annotations

import random

import mpmath

from ..errors import NonConvergence
from ..polyring import MultiPoly, discriminant_nonzero
from .precision import ComplexAP, default_precision

MAX_ITERATIONS = 500
SEED = 20240601


def coefficient_list(p, var: str | None = None) -> list:
    """Coefficients from the leading one down; accepts a univariate MultiPoly or a list."""
    if not isinstance(p, MultiPoly):
        return list(p)
    if var is None:
        if len(p.vars) != 1:
            raise ValueError(f"expected a univariate polynomial, got variables {p.vars}")
        var = p.vars[0]
    coeffs = p.coeffs_in(var)
    for c in coeffs.values():
        if not c.is_constant():
            raise ValueError("coefficients must be numbers")
    deg = p.degree(var)
    return [coeffs[k].constant_value() if k in coeffs else 0 for k in range(deg, -1, -1)]


def _horner(coeffs, z):
    p = coeffs[0]
    dp = 0
    for c in coeffs[1:]:
        dp = dp * z + p
        p = p * z + c
    return p, dp


def _cauchy_radius(coeffs):
    lead = abs(coeffs[0])
    return 1 + max(abs(c) for c in coeffs[1:]) / lead


def _aberth(coeffs, prec: int):
    n = len(coeffs) - 1
    rng = random.Random(SEED)
    radius = _cauchy_radius(coeffs)
    z = [radius * mpmath.expj(2 * mpmath.pi * k / n + mpmath.mpf(0.4) + mpmath.mpf(rng.random()) / (4 * n))
         for k in range(n)]
    eps = mpmath.ldexp(1, -prec + 8)
    for _ in range(MAX_ITERATIONS):
        worst = 0
        for k in range(n):
            p, dp = _horner(coeffs, z[k])
            if p == 0:
                continue
            ratio = p / dp if dp != 0 else mpmath.mpf(1)
            s = sum(1 / (z[k] - z[j]) for j in range(n) if j != k)
            step = ratio / (1 - ratio * s)
            z[k] -= step
            worst = max(worst, abs(step) / max(1, abs(z[k])))
        if worst < eps:
            return z
    return None


def _polish(coeffs, z):
    for _ in range(3):
        p, dp = _horner(coeffs, z)
        if dp == 0:
            break
        z = z - p / dp
    return z


def find_roots(p, precision: int | None = None, var: str | None = None) -> list:
    """Roots of a squarefree polynomial as :class:`ComplexAP` values."""
    if isinstance(p, MultiPoly) and p.degree() >= 1 and len(p.vars) == 1:
        if not discriminant_nonzero(p, p.vars[0]):
            raise ValueError("polynomial has a repeated root; deflate before root finding")
    precision = precision or default_precision()
    raw = coefficient_list(p, var)
    while raw and raw[0] == 0:
        raw.pop(0)
    if len(raw) < 2:
        raise ValueError("need degree at least 1")
    with mpmath.workprec(precision + 64):
        coeffs = [mpmath.mpmathify(c) for c in raw]
        roots = _aberth(coeffs, precision + 64)
        if roots is None:
            try:
                roots = mpmath.polyroots(coeffs, maxsteps=400, extraprec=precision)
            except mpmath.libmp.NoConvergence as exc:
                raise NonConvergence(f"root finding did not converge at {precision} bits") from exc
        roots = [_polish(coeffs, mpmath.mpc(r)) for r in roots]
        lead = abs(coeffs[0])
        bound = mpmath.ldexp(1, -precision // 2)
        out = []
        for r in roots:
            res = abs(_horner(coeffs, r)[0]) / lead
            if res > bound:
                raise NonConvergence(f"residual {mpmath.nstr(res, 5)} exceeds 2^-{precision // 2}")
            _, dp = _horner(coeffs, r)
            err = res / abs(dp) * lead if dp != 0 else res
            out.append(ComplexAP(+r, +err, precision))
    return out


def max_residual(p, roots, var: str | None = None):
    coeffs = [mpmath.mpmathify(c) for c in coefficient_list(p, var)]
    return max(abs(_horner(coeffs, r.value)[0]) / abs(coeffs[0]) for r in roots)
