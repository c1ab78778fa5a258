"""Division polynomials, their Moebius products and the torsion-field polynomials built from them."""

from __future__ import annotations

import threading

from ..errors import NotDivisible
from ..polyring import MultiPoly, P, exact_div, resultant
from .curve import Curve

CUBIC = "x^3 + a*x + b"  # value of y^2
SEEDS = {
    -1: "-1",
    0: "0",
    1: "1",
    2: "2*y",
    3: "3*x^4 + 6*a*x^2 + 12*b*x - a^2",
    4: "4*y*(x^6 + 5*a*x^4 + 20*b*x^3 - 5*a^2*x^2 - 4*a*b*x - 8*b^2 - a^3)",
}


def reduce_y(p: MultiPoly) -> MultiPoly:
    """Reduce modulo ``y^2 = x^3 + a x + b`` to ``y``-degree at most 1."""
    if "y" not in p.vars or p.degree("y") <= 1:
        return p
    cubic = P(CUBIC)
    y = MultiPoly.var("y")
    out = MultiPoly.const(0)
    for k, c in p.coeffs_in("y").items():
        term = c * cubic ** (k // 2)
        out = out + (term * y if k % 2 else term)
    return out


def divide_by_2y(p: MultiPoly) -> MultiPoly:
    """Exact quotient by ``2y`` in the coordinate ring of the curve."""
    parts = p.coeffs_in("y")
    if set(parts) <= {1}:
        return parts.get(1, MultiPoly.const(0)) / 2
    if set(parts) == {0}:
        # 1/y = y / (x^3 + a x + b)
        return MultiPoly.var("y") * exact_div(parts[0], P(CUBIC) * 2)
    raise NotDivisible("mixed y-parity numerator cannot be divided by 2y")


class DivisionPolySequence:
    """Cached division polynomials; the cache only grows and writes are serialized."""

    def __init__(self):
        self._cache = {n: P(s) if n != 4 else reduce_y(P(s)) for n, s in SEEDS.items()}
        self._lock = threading.Lock()

    def __call__(self, n: int) -> MultiPoly:
        if n < -1:
            raise ValueError("division polynomials are indexed from -1")
        if n in self._cache:
            return self._cache[n]
        if n % 2:
            m = (n - 1) // 2
            val = self(m + 2) * self(m) ** 3 - self(m - 1) * self(m + 1) ** 3
            val = reduce_y(val)
        else:
            m = n // 2
            num = self(m) * (self(m + 2) * self(m - 1) ** 2 - self(m - 2) * self(m + 1) ** 2)
            val = divide_by_2y(reduce_y(num))
        with self._lock:
            self._cache.setdefault(n, val)
        return self._cache[n]


_SEQUENCE = DivisionPolySequence()


def division_poly(n: int) -> MultiPoly:
    """``A_n`` in ``x, y, a, b``, reduced so that ``y`` appears to degree at most 1."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return _SEQUENCE(n)


def mobius(n: int) -> int:
    result, k, m = 1, 2, n
    while k * k <= m:
        if m % k == 0:
            m //= k
            if m % k == 0:
                return 0
            result = -result
        k += 1
    return -result if m > 1 else result


def gamma_n(n: int) -> MultiPoly:
    """``prod_{d | n} A_d^mu(n/d)``, divided out exactly."""
    if n < 2:
        raise ValueError("n must be at least 2")
    num, den = MultiPoly.const(1), MultiPoly.const(1)
    for d in range(1, n + 1):
        if n % d:
            continue
        mu = mobius(n // d)
        if mu == 1:
            num = num * division_poly(d)
        elif mu == -1:
            den = den * division_poly(d)
    num, den = reduce_y(num), reduce_y(den)
    try:
        return exact_div(num, den)
    except NotDivisible:
        if den.degree("y") < 1:
            raise
        # clear y from the denominator: multiply through by y
        y = MultiPoly.var("y")
        return exact_div(reduce_y(num * y), reduce_y(den * y))


# the two readings of the quadratic in the torsion-field resultant
CONVENTIONS = {
    "curve": "X^2 - (Y^3 + a*Y + b)",
    "printed": "X^2 - (Y^3 - a*Y - b)",
}


def torsion_field_poly(n: int, curve: Curve | None = None, convention: str = "curve", monic: bool = True):
    """``Res_Y(Gamma_n(Y), quadratic)``, made monic in ``X`` by default."""
    g = gamma_n(n)
    if "y" in g.vars:
        raise ValueError(f"Gamma_{n} depends on y; no torsion-field polynomial in X alone")
    g = g.rename({"x": "Y"})
    q = P(CONVENTIONS[convention])
    if curve is not None:
        g = g.substitute(curve.bindings())
        q = q.substitute(curve.bindings())
    T = resultant(g, q, "Y")
    if monic:
        lead = T.coeffs_in("X")[T.degree("X")]
        T = T / lead.constant_value()
    return T


def adopt_t4_convention(printed: MultiPoly) -> tuple:
    """Try both quadratics; return ``(convention, T4)`` for the one equal to ``printed``, else ``(None, None)``."""
    for name in CONVENTIONS:
        T = torsion_field_poly(4, convention=name)
        if T == printed:
            return name, T
    return None, None
