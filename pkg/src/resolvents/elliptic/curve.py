"""Short Weierstrass curves ``y^2 = x^3 + a x + b`` over Q and rational points on them."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from ..errors import PointNotOnCurve, SingularCurve
from ..polyring import MultiPoly, P, as_rational

CURVE_RELATION = "z^3 + a*z + b"  # value of w^2 at a point (z, w)


@dataclass(frozen=True)
class Curve:
    a: Fraction | int
    b: Fraction | int

    def __post_init__(self):
        object.__setattr__(self, "a", as_rational(self.a))
        object.__setattr__(self, "b", as_rational(self.b))
        if self.d == 0:
            raise SingularCurve(f"4a^3 + 27b^2 = 0 for a={self.a}, b={self.b}")

    @property
    def d(self):
        return 4 * self.a ** 3 + 27 * self.b ** 2

    @property
    def Delta(self):
        return -16 * self.d

    def bindings(self) -> dict:
        return {"a": self.a, "b": self.b}

    def to_json(self) -> dict:
        return {"a": str(self.a), "b": str(self.b)}


@dataclass(frozen=True)
class CurvePoint:
    curve: Curve
    z: Fraction | int
    w: Fraction | int

    def __post_init__(self):
        object.__setattr__(self, "z", as_rational(self.z))
        object.__setattr__(self, "w", as_rational(self.w))
        c = self.curve
        if self.w ** 2 != self.z ** 3 + c.a * self.z + c.b:
            raise PointNotOnCurve(f"({self.z}, {self.w}) is not on y^2 = x^3 + a*x + b with a={c.a}, b={c.b}")

    def bindings(self) -> dict:
        return {"a": self.curve.a, "b": self.curve.b, "z": self.z, "w": self.w}

    def to_json(self) -> dict:
        return {**self.curve.to_json(), "z": str(self.z), "w": str(self.w)}


def curve_new(a, b) -> Curve:
    return Curve(a, b)


def point_new(curve: Curve, z, w) -> CurvePoint:
    return CurvePoint(curve, z, w)


def point_through(a, z, w) -> CurvePoint:
    """The curve through ``(z, w)`` with the given ``a``: ``b = w^2 - z^3 - a z``."""
    a, z, w = as_rational(a), as_rational(z), as_rational(w)
    return CurvePoint(Curve(a, w * w - z ** 3 - a * z), z, w)


def curve_normal_form(p: MultiPoly) -> MultiPoly:
    """Reduce ``w^2 -> z^3 + a z + b`` so that ``w`` appears to degree at most 1."""
    if "w" not in p.vars:
        return p
    w2 = P(CURVE_RELATION)
    w = MultiPoly.var("w")
    out = MultiPoly.const(0)
    powers = {0: MultiPoly.const(1)}
    for k, c in p.coeffs_in("w").items():
        half = k // 2
        if half not in powers:
            powers[half] = w2 ** half
        term = c * powers[half]
        out = out + (term * w if k % 2 else term)
    return out


def expand_discriminants(p: MultiPoly) -> MultiPoly:
    """Replace the symbols ``d`` and ``Delta`` by their expressions in ``a, b``."""
    d = P("4*a^3 + 27*b^2")
    return p.substitute({"d": d, "Delta": d * -16})


def sample_points(count: int, seed: int = 7, bound: int = 3, accept=None) -> list:
    """Deterministic points built by choosing ``a, z, w`` and solving for ``b``.

    ``accept`` filters candidates (e.g. to require squarefree octics).
    """
    rng = random.Random(seed)
    out = []
    seen = set()
    first = [(1, 0, 1)]
    tries = 0
    while len(out) < count:
        tries += 1
        if tries > 10000:
            raise RuntimeError("could not find enough sample points")
        if first:
            a, z, w = first.pop()
        else:
            a = rng.randint(-bound, bound)
            z = rng.randint(-bound, bound)
            w = rng.randint(1, bound)
        if (a, z, w) in seen:
            continue
        seen.add((a, z, w))
        try:
            pt = point_through(a, z, w)
        except SingularCurve:
            continue
        if accept is not None and not accept(pt):
            continue
        out.append(pt)
    return out
