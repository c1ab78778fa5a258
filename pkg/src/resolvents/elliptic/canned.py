"""The octic and sextic whose splitting fields the pipelines study."""

from __future__ import annotations

from ..polyring import MultiPoly, P
from .curve import Curve, CurvePoint

OCTIC = "x^8 - 8*w*x^6 + 6*(2*a*z + 3*b)*x^4 - (4*a^3 + 27*b^2)"
SEXTIC = "Y^6 + 5*a*Y^4 + 20*b*Y^3 - 5*a^2*Y^2 - 4*a*b*Y - a^3 - 8*b^2"


def octic_f(point: CurvePoint | None = None) -> MultiPoly:
    """Degree-8 polynomial attached to a rational point; symbolic in ``a, b, z, w`` without one."""
    f = P(OCTIC)
    return f if point is None else f.substitute(point.bindings())


def sextic_A(curve: Curve | None = None, var: str = "Y") -> MultiPoly:
    """Half the primitive 4-division polynomial, in ``var``."""
    f = P(SEXTIC)
    if var != "Y":
        f = f.rename({"Y": var})
    return f if curve is None else f.substitute(curve.bindings())
