"""Permutation action on polynomials in root variables ``x1..xn``."""

from __future__ import annotations

import re

from ..errors import DegreeMismatch, NotInvariant
from ..polyring import MultiPoly, format_poly, sum_polys
from .group import PermGroup
from .perm import Perm

_ROOT = re.compile(r"^x(\d+)$")


def root_indices(p: MultiPoly, prefix: str = "x") -> list:
    pat = _ROOT if prefix == "x" else re.compile(rf"^{re.escape(prefix)}(\d+)$")
    out = []
    for v in p.vars:
        m = pat.match(v)
        if m:
            out.append(int(m.group(1)))
    return out


def _check_degree(n: int, p: MultiPoly, prefix: str):
    bad = [i for i in root_indices(p, prefix) if not 1 <= i <= n]
    if bad:
        raise DegreeMismatch(f"root variables {bad} outside 1..{n}")


def act_on_poly(g: Perm, p: MultiPoly, prefix: str = "x") -> MultiPoly:
    """``g`` sends ``x_i`` to ``x_g(i)``; other variables are fixed."""
    _check_degree(g.degree, p, prefix)
    mapping = {}
    for i in root_indices(p, prefix):
        j = g(i)
        if j != i:
            mapping[f"{prefix}{i}"] = f"{prefix}{j}"
    return p.rename(mapping) if mapping else p


def orbit(F: PermGroup, m: MultiPoly, prefix: str = "x") -> list:
    """Distinct images of ``m`` under ``F``, in order of first appearance."""
    _check_degree(F.degree, m, prefix)
    seen = {}
    for g in F:
        img = act_on_poly(g, m, prefix)
        seen.setdefault(img, None)
    return list(seen)


def orbit_sum(F: PermGroup, m: MultiPoly, prefix: str = "x"):
    """``(weighted, plain)``: one summand per element of F versus one per distinct image."""
    _check_degree(F.degree, m, prefix)
    images = [act_on_poly(g, m, prefix) for g in F]
    weighted = sum_polys(images)
    plain = sum_polys(dict.fromkeys(images))
    return weighted, plain


def is_invariant(gens, p: MultiPoly, prefix: str = "x") -> bool:
    return all(act_on_poly(g, p, prefix) == p for g in gens)


def stabilizer_of_poly(G: PermGroup, p: MultiPoly, prefix: str = "x") -> PermGroup:
    _check_degree(G.degree, p, prefix)
    members = [g for g in G if act_on_poly(g, p, prefix) == p]
    return PermGroup(G.degree, members, members)


def conjugates_of_poly(G: PermGroup, transversal, p: MultiPoly, prefix: str = "x") -> list:
    """``rep(p)`` for each coset ``rep * F``; ``p`` must be fixed by ``F``."""
    if not transversal:
        return []
    F = transversal[0].subgroup
    if not is_invariant(F.generators, p, prefix):
        raise NotInvariant("polynomial is not fixed by the transversal's subgroup")
    return [act_on_poly(c.representative, p, prefix) for c in transversal]


def canonical_set(polys) -> tuple:
    """Sorted formatted strings; makes conjugate-set comparisons deterministic."""
    return tuple(sorted(format_poly(p) for p in polys))
