"""Resolvent coefficients from a table of fundamental invariants and their images."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations_with_replacement

from ..errors import InconsistentSystem, NotInSpan, NotInvariant
from ..permgroup import PermGroup, is_invariant
from ..polyring import MultiPoly, P, WeightSystem, homogeneous_weight, solve_rational


@dataclass(frozen=True)
class InvariantGenerator:
    name: str
    polynomial: MultiPoly
    image: MultiPoly

    @cached_property
    def degree(self) -> int:
        return self.polynomial.degree()

    def check(self, group: PermGroup, ws: WeightSystem) -> None:
        if not is_invariant(group.generators, self.polynomial):
            raise NotInvariant(f"generator {self.name} is not invariant")
        if homogeneous_weight(self.polynomial, ws) is None:
            raise ValueError(f"generator {self.name} is not homogeneous")
        if not self.image.is_zero() and homogeneous_weight(self.image, ws) != homogeneous_weight(self.polynomial, ws):
            raise ValueError(f"image of {self.name} has the wrong weight")


def _orbit_representative(e: tuple, perms) -> tuple:
    return min(tuple(e[j] for j in p) for p in perms)


class ProductBasis:
    """Products of generators, cached by multiset of generator indices."""

    def __init__(self, gens):
        self.gens = list(gens)
        self._cache = {(): (MultiPoly.const(1), MultiPoly.const(1))}

    def product(self, idx: tuple):
        if idx not in self._cache:
            head, last = idx[:-1], idx[-1]
            poly, image = self.product(head)
            g = self.gens[last]
            self._cache[idx] = (poly * g.polynomial, image * g.image)
        return self._cache[idx]

    def multisets(self, degree: int):
        """Multisets of generator indices whose degrees sum to ``degree``."""
        degs = [g.degree for g in self.gens]
        order = sorted(range(len(degs)), key=lambda i: degs[i])
        smallest = degs[order[0]] if degs else 1
        out = []
        for size in range(1, degree // max(smallest, 1) + 1):
            for combo in combinations_with_replacement(range(len(degs)), size):
                if sum(degs[i] for i in combo) == degree:
                    out.append(combo)
        return out


def engine_invariant_solve(coeff: MultiPoly, gens, group: PermGroup | None = None,
                           basis: ProductBasis | None = None) -> MultiPoly:
    """Write ``coeff`` as a rational combination of generator products and map it through the images.

    With ``group`` given, invariance is asserted and only one equation per
    orbit of monomials is kept.
    """
    basis = basis or ProductBasis(gens)
    if coeff.is_zero():
        return MultiPoly.const(0)
    if group is not None and not is_invariant(group.generators, coeff):
        raise NotInvariant("coefficient is not invariant under the group")
    deg = coeff.degree()
    if any(sum(e) != deg for e in coeff.terms):
        raise ValueError("coefficient is not homogeneous")
    if deg == 0:
        return coeff
    combos = basis.multisets(deg)
    if not combos:
        raise NotInSpan(f"no generator products of degree {deg}")
    products = [basis.product(c) for c in combos]

    vars = sorted({v for p, _ in products for v in p.vars} | set(coeff.vars))
    perms = None
    if group is not None:
        pos = {v: i for i, v in enumerate(vars)}
        # images of each variable position under every group element
        perms = []
        for g in group:
            idx = list(range(len(vars)))
            for v in vars:
                if v.startswith("x") and v[1:].isdigit():
                    target = f"x{g(int(v[1:]))}"
                    if target in pos:
                        idx[pos[target]] = pos[v]
            perms.append(tuple(idx))

    def keyed(p: MultiPoly) -> dict:
        out: dict = {}
        for e, c in p.terms.items():
            full = dict(zip(p.vars, e))
            k = tuple(full.get(v, 0) for v in vars)
            if perms is not None:
                k = _orbit_representative(k, perms)
                # an invariant has equal coefficients along the orbit; keep one
                out.setdefault(k, c)
            else:
                out[k] = c
        return out

    columns = [keyed(p) for p, _ in products]
    target = keyed(coeff)
    rows = sorted(set(target).union(*columns))
    A = [[col.get(r, 0) for col in columns] for r in rows]
    b = [target.get(r, 0) for r in rows]
    try:
        x, _ = solve_rational(A, b)
    except InconsistentSystem:
        raise NotInSpan(f"degree-{deg} coefficient is outside the span of generator products") from None

    combo = MultiPoly.const(0)
    image = MultiPoly.const(0)
    for xi, (poly, img) in zip(x, products):
        if xi:
            combo = combo + poly.scale(xi)
            image = image + img.scale(xi)
    assert combo == coeff, "invariant solve failed back-substitution"
    return image


def table_consistency(gens, sextic: MultiPoly, var: str = "Y", group: PermGroup | None = None) -> dict:
    """Map each ``e_k`` of the roots through the table and compare with the sextic's coefficients.

    Returns ``{k: (image, expected)}``; the table is consistent iff every pair agrees.
    """
    from ..polyring import elem_sym

    coeffs = sextic.coeffs_in(var)
    n = sextic.degree(var)
    basis = ProductBasis(gens)
    out = {}
    for k in range(1, n + 1):
        image = engine_invariant_solve(elem_sym(n, k), gens, group, basis)
        expected = coeffs.get(n - k, MultiPoly.const(0)) * (-1) ** k
        out[k] = (image, expected)
    return out


def generators_from_table(rows, group: PermGroup) -> list:
    """``rows`` of ``(name, monomial text, image text)``; polynomials are plain orbit sums over ``group``."""
    from ..permgroup import orbit_sum

    return [InvariantGenerator(name, orbit_sum(group, P(mono))[1], P(img)) for name, mono, img in rows]
