"""Coefficients of the octic resolvents via the negation pairing of roots.

The octic's roots come in pairs ``r, -r``.  Substituting the pairing turns a
G-invariant in ``x1..x8`` into a polynomial in ``x1..x4`` that is invariant
under signed permutations up to the sign character carried by ``v35``.
Such a polynomial is ``A(E) + v35 * B(E)`` with ``E1..E4`` the elementary
symmetric functions of the squares ``x1^2..x4^2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from ..errors import InconsistentSystem, NotDivisible, NotInSquareSubring, NotInvariant
from ..permgroup import PermGroup, is_invariant
from ..polyring import MultiPoly, P, exact_div, root_names, solve_rational, symmetric_reduce

PAIRS = ((1, 8), (2, 6), (3, 7), (4, 5))
HALF_ROOTS = root_names(4)
E_NAMES = ("E1", "E2", "E3", "E4")

# elementary symmetric functions of the squares, in e1..e4
SQUARE_ELEMENTARY = {
    "E1": "e1^2 - 2*e2",
    "E2": "e2^2 - 2*e1*e3 + 2*e4",
    "E3": "e3^2 - 2*e2*e4",
    "E4": "e4^2",
}


@dataclass(frozen=True)
class PairingRelations:
    """``x_j -> -x_i`` for each pair ``(i, j)``, and the values of ``E1..E4`` on the roots."""

    values: dict
    pairs: tuple = PAIRS
    substitution: dict = field(init=False)

    def __post_init__(self):
        sub = {f"x{j}": -MultiPoly.var(f"x{i}") for i, j in self.pairs}
        object.__setattr__(self, "substitution", sub)

    @classmethod
    def from_octic(cls, octic: MultiPoly, var: str = "x") -> "PairingRelations":
        """``E_k = (-1)^k`` times the coefficient of ``var^(8-2k)``; the octic must be even."""
        coeffs = octic.coeffs_in(var)
        if octic.degree(var) != 8 or any(k % 2 for k in coeffs):
            raise ValueError("expected an even monic octic")
        if coeffs[8] != MultiPoly.const(1):
            raise ValueError("octic must be monic")
        zero = MultiPoly.const(0)
        values = {f"E{k}": coeffs.get(8 - 2 * k, zero) * (-1) ** k for k in range(1, 5)}
        return cls(values)

    def apply(self, p: MultiPoly) -> MultiPoly:
        return p.substitute(self.substitution)


@lru_cache(maxsize=None)
def _square_elementary() -> dict:
    return {k: P(v) for k, v in SQUARE_ELEMENTARY.items()}


def _e_weight(e: tuple, vars: tuple) -> int:
    return sum(int(v[1:]) * k for v, k in zip(vars, e) if v in ("e1", "e2", "e3", "e4"))


def _e_monomials(weight: int) -> list:
    """Exponent vectors of ``E1^i E2^j E3^k E4^l`` with ``2i + 4j + 6k + 8l = weight``."""
    out = []
    for l in range(weight // 8 + 1):
        for k in range((weight - 8 * l) // 6 + 1):
            for j in range((weight - 8 * l - 6 * k) // 4 + 1):
                rest = weight - 8 * l - 6 * k - 4 * j
                if rest % 2 == 0:
                    out.append((rest // 2, j, k, l))
    return out


def to_square_subring(q: MultiPoly) -> MultiPoly:
    """Rewrite ``q`` in ``e1..e4`` (plus parameters) as a polynomial in ``E1..E4``.

    Solved by exact linear algebra, one system per weight and parameter monomial.
    Raises :class:`NotInSquareSubring` when no such expression exists.
    """
    evars = tuple(v for v in q.vars if v in ("e1", "e2", "e3", "e4"))
    params = tuple(v for v in q.vars if v not in evars)
    ei = [q.vars.index(v) for v in evars]
    pi = [q.vars.index(v) for v in params]
    groups: dict = {}
    for e, c in q.terms.items():
        w = sum(int(q.vars[i][1:]) * e[i] for i in ei)
        pe = tuple(e[i] for i in pi)
        groups.setdefault((w, pe), {})[tuple(e[i] for i in ei)] = c

    sq = _square_elementary()
    cache: dict = {}
    result = MultiPoly.const(0)
    for (w, pe), terms in sorted(groups.items()):
        if w % 2:
            raise NotInSquareSubring(f"weight {w} component is odd in the roots")
        target = MultiPoly(terms, evars)
        full = ("e1", "e2", "e3", "e4")
        if w not in cache:
            monos = _e_monomials(w)
            polys = []
            for m in monos:
                p = MultiPoly.const(1)
                for name, k in zip(E_NAMES, m):
                    if k:
                        p = p * sq[name] ** k
                polys.append(p)
            cache[w] = (monos, polys)
        monos, polys = cache[w]
        cols = [_embed(p, full) for p in polys]
        tgt = _embed(target, full)
        rows = sorted(set(tgt).union(*cols))
        A = [[col.get(r, 0) for col in cols] for r in rows]
        b = [tgt.get(r, 0) for r in rows]
        try:
            x, _ = solve_rational(A, b)
        except InconsistentSystem:
            raise NotInSquareSubring(f"weight {w} component is not a polynomial in the squares") from None
        pmono = MultiPoly.monomial(1, dict(zip(params, pe)))
        for xi, m in zip(x, monos):
            if xi:
                result = result + pmono * MultiPoly.monomial(xi, dict(zip(E_NAMES, m)))
    back = result.substitute(sq)
    assert back == q, "square-subring rewrite failed back-substitution"
    return result


def _embed(p: MultiPoly, vars: tuple) -> dict:
    out = {}
    for e, c in p.terms.items():
        full = dict(zip(p.vars, e))
        out[tuple(full.get(v, 0) for v in vars)] = c
    return out


def _omega_even(p: MultiPoly, rel: PairingRelations) -> MultiPoly:
    """Image of a signed-permutation invariant in ``x1..x4``."""
    reduced = symmetric_reduce(p, roots=HALF_ROOTS)
    return to_square_subring(reduced).substitute(rel.values)


def split_by_transposition(p: MultiPoly):
    """``(sym, anti)`` parts of ``p`` under swapping ``x1`` and ``x2``."""
    swapped = p.rename({"x1": "x2", "x2": "x1"})
    return (p + swapped) / 2, (p - swapped) / 2


def engine_sign_specialize(coeff: MultiPoly, rel: PairingRelations, group: PermGroup | None = None,
                           anti_invariant=None) -> MultiPoly:
    """Image of a G-invariant ``coeff`` in ``x1..x8`` in terms of the curve parameters.

    ``anti_invariant`` is an optional ``(v, image)`` pair for a sign-character
    invariant such as ``v35``; without it a coefficient with a nonzero
    sign-character part raises :class:`NotInSquareSubring`.
    """
    if group is not None and not is_invariant(group.generators, coeff):
        raise NotInvariant("coefficient is not invariant under the group")
    half = rel.apply(coeff)
    sym, anti = split_by_transposition(half)
    value = _omega_even(sym, rel)
    if anti.is_zero():
        return value
    if anti_invariant is None:
        raise NotInSquareSubring("coefficient has a part that changes sign with the root labeling")
    v, image = anti_invariant
    try:
        quotient = exact_div(anti, v)
    except NotDivisible:
        raise NotInSquareSubring("sign-changing part is not a multiple of the anti-invariant") from None
    return value + _omega_even(quotient, rel) * image


def vanishing_check(conjugates, rel: PairingRelations) -> bool:
    """True iff every conjugate becomes zero under the pairing substitution."""
    return all(rel.apply(c).is_zero() for c in conjugates)


V35_MONOMIAL = "x1^7*x2^5*x3^3*x5"


def v35_product_form() -> MultiPoly:
    """``x1 x2 x3 x4 * prod_{i<j} (x_i^2 - x_j^2)``."""
    x = [MultiPoly.var(v) for v in HALF_ROOTS]
    out = x[0] * x[1] * x[2] * x[3]
    for i in range(4):
        for j in range(i + 1, 4):
            out = out * (x[i] ** 2 - x[j] ** 2)
    return out


def compute_v35(G: PermGroup):
    """``(u35, v35)``: the full-group sum of ``x1^7 x2^5 x3^3 x5`` and its paired specialization scaled by ``-1/8``."""
    from ..permgroup import orbit_sum

    u35, _ = orbit_sum(G, P(V35_MONOMIAL))
    rel = PairingRelations({})
    v35 = rel.apply(u35) * MultiPoly.const(-1) / 8
    if v35 != v35_product_form():
        raise AssertionError("v35 does not match its product form")
    return u35, v35


def v35_square_image(rel: PairingRelations) -> MultiPoly:
    """``omega(v35)^2``, which is sign-free and so computable exactly."""
    v = v35_product_form()
    return _omega_even(v * v, rel)
