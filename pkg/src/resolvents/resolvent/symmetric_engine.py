"""Resolvent coefficients from full symmetric reduction."""

from __future__ import annotations

from ..polyring import MultiPoly, P, root_names, symmetric_reduce


def _as_poly(c) -> MultiPoly:
    if isinstance(c, MultiPoly):
        return c
    if isinstance(c, str):
        return P(c)
    return MultiPoly.const(c)


def engine_symmetric(resolvent_in_roots: MultiPoly, f_coeffs, var: str = "x", roots=None) -> MultiPoly:
    """Rewrite every coefficient in ``var`` through the coefficients of ``f``.

    ``f_coeffs[k-1]`` is the coefficient of ``X^(n-k)`` in the monic ``f`` of degree
    ``n = len(f_coeffs)``, so ``e_k`` maps to ``(-1)^k f_coeffs[k-1]``.
    """
    f_coeffs = [_as_poly(c) for c in f_coeffs]
    n = len(f_coeffs)
    roots = tuple(roots) if roots is not None else root_names(n)
    e_names = root_names(n, "e")
    images = {e_names[k - 1]: f_coeffs[k - 1] * (-1) ** k for k in range(1, n + 1)}
    out = {}
    for power, coeff in resolvent_in_roots.coeffs_in(var).items():
        reduced = symmetric_reduce(coeff, roots=roots)
        out[power] = reduced.substitute(images)
    return MultiPoly.from_coeffs(var, out)
