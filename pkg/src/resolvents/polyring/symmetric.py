"""Elementary symmetric polynomials and Gauss's reduction algorithm."""

from __future__ import annotations

from itertools import combinations

from ..errors import NotSymmetric
from .poly import MultiPoly


def root_names(n: int, prefix: str = "x") -> tuple:
    return tuple(f"{prefix}{i}" for i in range(1, n + 1))


def elem_sym(n: int, k: int, prefix: str = "x") -> MultiPoly:
    """``e_k`` in ``x1..xn``."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    vars = root_names(n, prefix)
    terms = {}
    for idx in combinations(range(n), k):
        e = [0] * n
        for i in idx:
            e[i] = 1
        terms[tuple(e)] = 1
    return MultiPoly(terms, vars)


def is_symmetric(p: MultiPoly, roots) -> bool:
    """Invariance under the generators (1,2) and (1,2,...,n) of S_n."""
    roots = tuple(roots)
    if len(roots) < 2:
        return True
    swap = {roots[0]: roots[1], roots[1]: roots[0]}
    cycle = {r: roots[(i + 1) % len(roots)] for i, r in enumerate(roots)}
    return p.rename(swap) == p and p.rename(cycle) == p


def _group_by_roots(p: MultiPoly, roots: tuple) -> dict:
    pos = [p.vars.index(r) if r in p.vars else None for r in roots]
    rest_idx = [i for i, v in enumerate(p.vars) if v not in roots]
    rest_vars = tuple(p.vars[i] for i in rest_idx)
    groups: dict = {}
    for e, c in p.terms.items():
        key = tuple(e[i] if i is not None else 0 for i in pos)
        groups.setdefault(key, {})[tuple(e[i] for i in rest_idx)] = c
    return {k: MultiPoly._raw(rest_vars, t) for k, t in groups.items()}


def symmetric_reduce(p: MultiPoly, n: int | None = None, roots=None, e_prefix: str = "e",
                     verify: bool = True) -> MultiPoly:
    """Rewrite a symmetric ``p`` as a polynomial in ``e1..en``.

    Variables other than the roots are carried along as coefficients.
    Raises :class:`NotSymmetric` if some transposition of roots moves ``p``.
    """
    if roots is None:
        if n is None:
            raise ValueError("give n or roots")
        roots = root_names(n)
    roots = tuple(roots)
    n = len(roots)
    e_names = root_names(n, e_prefix)
    clash = set(e_names) & set(p.vars)
    if clash:
        raise ValueError(f"variables {sorted(clash)} collide with elementary symbol names")
    if not is_symmetric(p, roots):
        raise NotSymmetric("polynomial is not symmetric in " + ",".join(roots))

    rename = {f"x{i}": r for i, r in enumerate(roots, 1)}
    elem = [MultiPoly.const(1)] + [elem_sym(n, k).rename(rename) for k in range(1, n + 1)]
    evar = [None] + [MultiPoly.var(name) for name in e_names]
    expanded: dict = {(0,) * n: MultiPoly.const(1)}

    def expand(powers: tuple) -> MultiPoly:
        # product of e_k^powers[k-1] in the roots, built from a cached smaller product
        if powers not in expanded:
            k = max(i for i, v in enumerate(powers) if v)
            smaller = powers[:k] + (powers[k] - 1,) + powers[k + 1:]
            expanded[powers] = expand(smaller) * elem[k + 1]
        return expanded[powers]

    result = MultiPoly.const(0)
    rem = p
    while not rem.is_zero():
        groups = _group_by_roots(rem, roots)
        lead = max(groups)
        if any(lead[i] < lead[i + 1] for i in range(n - 1)):
            raise NotSymmetric("leading exponent is not a partition")
        powers = tuple(lead[i] - lead[i + 1] for i in range(n - 1)) + (lead[-1],)
        coeff = groups[lead]
        mono = MultiPoly.const(1)
        for k, m in enumerate(powers, 1):
            if m:
                mono = mono * evar[k] ** m
        result = result + coeff * mono
        rem = rem - coeff * expand(powers)

    if verify:
        back = result.substitute({e_names[k - 1]: elem[k] for k in range(1, n + 1)})
        assert back == p, "symmetric reduction failed back-substitution"
    return result


def elementary_to_roots(q: MultiPoly, roots, e_prefix: str = "e") -> MultiPoly:
    """Substitute ``e_k -> e_k(roots)``; inverse of :func:`symmetric_reduce`."""
    roots = tuple(roots)
    n = len(roots)
    rename = {f"x{i}": r for i, r in enumerate(roots, 1)}
    return q.substitute({f"{e_prefix}{k}": elem_sym(n, k).rename(rename) for k in range(1, n + 1)})
