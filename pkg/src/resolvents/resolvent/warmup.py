"""Resolvent cubic of a generic quartic."""

from __future__ import annotations

from ..permgroup import conjugates_of_poly
from ..permgroup.catalog import warmup
from ..permgroup.group import Coset
from ..polyring import MultiPoly
from .report import ResolventReport
from .symmetric_engine import engine_symmetric
from .vieta import vieta_expand

QUARTIC_COEFFS = ("a3", "a2", "a1", "a0")


def resolvent_cubic(coeffs=None, var: str = "x") -> ResolventReport:
    """``g`` for ``x^4 + a3 x^3 + a2 x^2 + a1 x + a0``; symbolic unless ``coeffs`` are given."""
    setup = warmup()
    cosets = [Coset(g, setup.F) for g in setup.printed_transversal]
    conj = conjugates_of_poly(setup.G, cosets, setup.invariant)
    in_roots = vieta_expand(conj, var)
    f_coeffs = list(coeffs) if coeffs is not None else list(QUARTIC_COEFFS)
    if len(f_coeffs) != 4:
        raise ValueError("a quartic needs four coefficients a3, a2, a1, a0")
    g = engine_symmetric(in_roots, f_coeffs, var)
    return ResolventReport(
        name="resolvent-cubic",
        groups={"G": "S4", "H": "V4", "F": "D4", "order": setup.G.order},
        invariant=setup.invariant,
        conjugates=conj,
        resolvent=g,
        var=var,
        engine="symmetric",
        extra={"in_roots": in_roots},
    )


def quartic(coeffs=None, var: str = "x") -> MultiPoly:
    names = list(coeffs) if coeffs is not None else list(QUARTIC_COEFFS)
    x = MultiPoly.var(var)
    out = x ** 4
    for k, c in zip((3, 2, 1, 0), names):
        c = MultiPoly.var(c) if isinstance(c, str) else MultiPoly.const(c)
        out = out + c * x ** k
    return out
