"""Permutations of ``{1..n}`` in cycle notation, stored 0-based."""

from __future__ import annotations

import re
from math import lcm
from typing import Iterable, Sequence

_CYCLE = re.compile(r"\(([^()]*)\)")


class Perm:
    """A permutation; ``p * q`` applies ``q`` first, then ``p``."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(n))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Perm":
        """Cycles use 1-based points."""
        img = list(range(n))
        seen = set()
        for cyc in cycles:
            pts = [c - 1 for c in cyc]
            if any(not 0 <= p < n for p in pts):
                raise ValueError(f"cycle {tuple(cyc)} leaves {{1..{n}}}")
            if seen & set(pts) or len(set(pts)) != len(pts):
                raise ValueError(f"cycles are not disjoint: {tuple(cyc)}")
            seen.update(pts)
            for i, p in enumerate(pts):
                img[p] = pts[(i + 1) % len(pts)]
        return cls(img)

    @classmethod
    def parse(cls, text: str, n: int) -> "Perm":
        """Parse cycle notation such as ``"(1,3,4,8,7,5)(2,6)"`` or ``"()"``."""
        stripped = re.sub(r"\s", "", text)
        if not stripped or _CYCLE.sub("", stripped):
            raise ValueError(f"bad cycle notation {text!r}")
        cycles = []
        for body in _CYCLE.findall(stripped):
            if body:
                cycles.append([int(t) for t in body.split(",")])
        return cls.from_cycles(cycles, n)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        """Image of a 1-based point."""
        return self.images[point - 1] + 1

    def __mul__(self, other: "Perm") -> "Perm":
        if len(other.images) != len(self.images):
            raise ValueError("degree mismatch")
        s = self.images
        return Perm(tuple(s[j] for j in other.images))

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(inv)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def order(self) -> int:
        out = 1
        for cyc in self.cycles():
            out = lcm(out, len(cyc))
        return out

    def cycles(self) -> list:
        """Nontrivial cycles, 1-based, each starting at its least point."""
        seen = set()
        out = []
        for i in range(len(self.images)):
            if i in seen or self.images[i] == i:
                continue
            cyc = [i + 1]
            seen.add(i)
            j = self.images[i]
            while j != i:
                cyc.append(j + 1)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)

    def __repr__(self) -> str:
        return f"Perm({str(self)!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Perm") -> bool:
        return self.images < other.images
