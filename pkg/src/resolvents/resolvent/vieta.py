"""Monic polynomials from their roots."""

from __future__ import annotations

from ..polyring import MultiPoly


def vieta_expand(conjugates, var: str) -> MultiPoly:
    """``prod(var - c)`` over the conjugates, expanded."""
    conjugates = list(conjugates)
    if not conjugates:
        raise ValueError("need at least one conjugate")
    x = MultiPoly.var(var)
    out = MultiPoly.const(1)
    for c in conjugates:
        out = out * (x - c)
    return out


def vieta_coefficients(conjugates) -> list:
    """``[s_1, ..., s_n]`` with ``prod(X - c) = X^n - s_1 X^(n-1) + s_2 X^(n-2) - ...``.

    Cheaper than :func:`vieta_expand` when each coefficient is handled separately.
    """
    elem = [MultiPoly.const(1)]
    for c in conjugates:
        nxt = elem + [MultiPoly.const(0)]
        for k in range(len(elem), 0, -1):
            nxt[k] = nxt[k] + elem[k - 1] * c
        elem = nxt
    return elem[1:]


def assemble(coefficients, var: str) -> MultiPoly:
    """Inverse of :func:`vieta_coefficients` once each ``s_k`` has been evaluated."""
    n = len(coefficients)
    terms = {n: MultiPoly.const(1)}
    for k, s in enumerate(coefficients, 1):
        terms[n - k] = s if k % 2 == 0 else -s
    return MultiPoly.from_coeffs(var, terms)
