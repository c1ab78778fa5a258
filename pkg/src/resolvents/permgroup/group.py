"""Fully enumerated permutation groups.

Every group in this package has order at most a few hundred, so groups are
closed by breadth-first search and stored as a sorted element list.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from ..errors import CapExceeded, NotASubgroup
from .perm import Perm

DEFAULT_CAP = 10 ** 6


class PermGroup:
    __slots__ = ("degree", "generators", "elements", "_set", "label")

    def __init__(self, degree: int, generators: Sequence[Perm], elements: Iterable[Perm], label: str = ""):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(sorted(elements))
        self._set = frozenset(self.elements)
        self.label = label

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g: Perm) -> bool:
        return g in self._set

    def __eq__(self, other) -> bool:
        return isinstance(other, PermGroup) and self._set == other._set

    def __hash__(self) -> int:
        return hash(self._set)

    def __repr__(self) -> str:
        name = f" {self.label}" if self.label else ""
        return f"<PermGroup{name} degree={self.degree} order={self.order}>"

    @property
    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    def issubset(self, other: "PermGroup") -> bool:
        return self._set <= other._set

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for a in gens for b in gens)

    def involutions(self) -> list:
        return [g for g in self.elements if g.order() == 2]

    def exponent_profile(self) -> dict:
        """``{element order: count}``."""
        out: dict = {}
        for g in self.elements:
            out[g.order()] = out.get(g.order(), 0) + 1
        return dict(sorted(out.items()))

    def to_json(self) -> dict:
        return {"degree": self.degree, "generators": [str(g) for g in self.generators]}

    @classmethod
    def from_json(cls, data) -> "PermGroup":
        return group_closure(data["degree"], [Perm.parse(s, data["degree"]) for s in data["generators"]])


def group_closure(degree: int, gens: Iterable, cap: int = DEFAULT_CAP, label: str = "") -> PermGroup:
    """Close ``gens`` (Perms or cycle strings) under composition."""
    gens = [g if isinstance(g, Perm) else Perm.parse(g, degree) for g in gens]
    for g in gens:
        if g.degree != degree:
            raise ValueError(f"generator {g} has degree {g.degree}, expected {degree}")
    ident = Perm.identity(degree)
    seen = {ident}
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = s * g
            if h not in seen:
                seen.add(h)
                if len(seen) > cap:
                    raise CapExceeded(f"group order exceeds cap {cap}")
                queue.append(h)
    return PermGroup(degree, gens, seen, label)


def symmetric_group(n: int) -> PermGroup:
    if n == 1:
        return group_closure(1, [])
    gens = [Perm.from_cycles([(1, 2)], n)]
    if n > 2:
        gens.append(Perm.from_cycles([tuple(range(1, n + 1))], n))
    return group_closure(n, gens, label=f"S{n}")


def _require_subgroup(G: PermGroup, H: PermGroup):
    if H.degree != G.degree or not H.issubset(G):
        raise NotASubgroup(f"{H!r} is not contained in {G!r}")


def is_normal(G: PermGroup, H: PermGroup) -> bool:
    _require_subgroup(G, H)
    for g in G.generators:
        ginv = g.inverse()
        for h in H.generators:
            if g * h * ginv not in H:
                return False
    return True


def normalizer(G: PermGroup, S: PermGroup) -> PermGroup:
    """``{g in G : g S g^-1 = S}``."""
    _require_subgroup(G, S)
    members = [g for g in G if all(g * s * g.inverse() in S for s in S.generators)]
    return PermGroup(G.degree, members, members)


@dataclass(frozen=True, eq=False)
class Coset:
    """Left coset ``representative * subgroup``."""

    representative: Perm
    subgroup: PermGroup

    def __contains__(self, g: Perm) -> bool:
        return self.representative.inverse() * g in self.subgroup

    def members(self) -> list:
        return sorted(self.representative * f for f in self.subgroup)

    def canonical(self) -> Perm:
        return self.members()[0]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Coset)
            and self.subgroup == other.subgroup
            and self.representative.inverse() * other.representative in self.subgroup
        )

    def __hash__(self) -> int:
        return hash(self.canonical())

    def __str__(self) -> str:
        return f"{self.representative}F"


def left_transversal(G: PermGroup, F: PermGroup) -> list:
    """One coset per element of ``G/F``; each representative is the least element of its coset."""
    _require_subgroup(G, F)
    covered: set = set()
    out = []
    for g in G.elements:
        if g in covered:
            continue
        out.append(Coset(g, F))
        covered.update(g * f for f in F)
    return out


def is_left_transversal(G: PermGroup, F: PermGroup, reps: Sequence[Perm]) -> bool:
    """True iff ``reps`` lie in G and hit every left coset of F exactly once."""
    if any(r not in G for r in reps) or len(reps) * F.order != G.order:
        return False
    cosets = {Coset(r, F) for r in reps}
    return len(cosets) == len(reps)


def is_right_transversal(G: PermGroup, F: PermGroup, reps: Sequence[Perm]) -> bool:
    if any(r not in G for r in reps) or len(reps) * F.order != G.order:
        return False
    cosets = {frozenset(f * r for f in F) for r in reps}
    return len(cosets) == len(reps)
