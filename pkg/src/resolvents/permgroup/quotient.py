"""Quotient groups as coset multiplication tables, and isomorphism search."""

from __future__ import annotations

from collections import deque
from itertools import product

from ..errors import NotNormal
from .group import PermGroup, is_normal, symmetric_group


class Quotient:
    """``G/H`` for normal ``H``; element ``i`` is the coset with least member ``reps[i]``."""

    def __init__(self, G: PermGroup, H: PermGroup):
        if not is_normal(G, H):
            raise NotNormal(f"{H!r} is not normal in {G!r}")
        self.G, self.H = G, H
        index = {}
        reps = []
        for g in G.elements:
            if g in index:
                continue
            i = len(reps)
            reps.append(g)
            for h in H:
                index[g * h] = i
        self.reps = reps
        self._index = index
        n = len(reps)
        self.table = [[index[reps[i] * reps[j]] for j in range(n)] for i in range(n)]
        self.identity = index[G.identity]

    @property
    def order(self) -> int:
        return len(self.reps)

    def coset_of(self, g) -> int:
        return self._index[g]

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inverse(self, i: int) -> int:
        return self.table[i].index(self.identity)

    def element_order(self, i: int) -> int:
        k, x = 1, i
        while x != self.identity:
            x = self.table[x][i]
            k += 1
        return k

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.table[i][j] == self.table[j][i] for i in range(n) for j in range(i))

    def image(self, S: PermGroup) -> frozenset:
        """Projection of a subgroup of G into the quotient."""
        return frozenset(self._index[s] for s in S)

    def normalizer(self, subset: frozenset) -> frozenset:
        out = []
        for q in range(self.order):
            qi = self.inverse(q)
            if all(self.mul(self.mul(q, s), qi) in subset for s in subset):
                out.append(q)
        return frozenset(out)


def _table_of(group: PermGroup):
    elems = list(group.elements)
    pos = {g: i for i, g in enumerate(elems)}
    table = [[pos[a * b] for b in elems] for a in elems]
    return table, pos[group.identity]


def _generating_set(table, identity) -> list:
    n = len(table)

    def closure(gens):
        seen = {identity}
        queue = deque([identity])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = table[x][g]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen

    orders = [_order(table, identity, i) for i in range(n)]
    gens: list = []
    current = {identity}
    for i in sorted(range(n), key=lambda i: -orders[i]):
        if i not in current:
            gens.append(i)
            current = closure(gens)
            if len(current) == n:
                break
    return gens


def _order(table, identity, i) -> int:
    k, x = 1, i
    while x != identity:
        x = table[x][i]
        k += 1
    return k


def find_isomorphism(table, identity, target: PermGroup):
    """Search generator images for an isomorphism from a Cayley table onto ``target``.

    Returns the map as a list ``phi[i] = target element`` or None.
    """
    n = len(table)
    if n != target.order:
        return None
    ttable, tid = _table_of(target)
    telems = list(target.elements)
    gens = _generating_set(table, identity)
    orders = [_order(table, identity, g) for g in gens]
    tord = [_order(ttable, tid, j) for j in range(n)]
    candidates = [[j for j in range(n) if tord[j] == o] for o in orders]
    for images in product(*candidates):
        phi = {identity: tid}
        queue = deque([identity])
        ok = True
        while queue and ok:
            x = queue.popleft()
            for g, img in zip(gens, images):
                y = table[x][g]
                val = ttable[phi[x]][img]
                if y in phi:
                    if phi[y] != val:
                        ok = False
                        break
                else:
                    phi[y] = val
                    queue.append(y)
        if ok and len(phi) == n and len(set(phi.values())) == n:
            return [telems[phi[i]] for i in range(n)]
    return None


def quotient_isomorphic_to(G: PermGroup, H: PermGroup, target: PermGroup) -> bool:
    Q = Quotient(G, H)
    return find_isomorphism(Q.table, Q.identity, target) is not None


def is_isomorphic_to_s4(G: PermGroup, H: PermGroup) -> bool:
    Q = Quotient(G, H)
    if Q.order != 24:
        return False
    return find_isomorphism(Q.table, Q.identity, symmetric_group(4)) is not None


def is_isomorphic_to_s3(G: PermGroup, H: PermGroup) -> bool:
    Q = Quotient(G, H)
    if Q.order != 6:
        return False
    return find_isomorphism(Q.table, Q.identity, symmetric_group(3)) is not None
