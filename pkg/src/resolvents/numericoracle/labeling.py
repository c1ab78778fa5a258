"""Assignments of numeric roots to root variables ``x1..xn``."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

import mpmath

from ..errors import NoPairing

OCTIC_PAIRS = ((1, 8), (2, 6), (3, 7), (4, 5))


def default_scheme(n: int) -> tuple:
    if n == 8:
        return OCTIC_PAIRS
    return tuple((i, n + 1 - i) for i in range(1, n // 2 + 1))


@dataclass(frozen=True)
class RootLabeling:
    """``values[i-1]`` is the numeric root assigned to ``x_i``."""

    values: tuple
    scheme: tuple = ()

    @property
    def degree(self) -> int:
        return len(self.values)

    def point(self, prefix: str = "x") -> dict:
        return {f"{prefix}{i}": v for i, v in enumerate(self.values, 1)}

    def relabel(self, perm) -> "RootLabeling":
        """``x_i`` receives the root previously assigned to ``x_perm[i-1]``."""
        return RootLabeling(tuple(self.values[j - 1] for j in perm), self.scheme)

    def pairing_residual(self):
        if not self.scheme:
            return mpmath.mpf(0)
        return max(abs(self.values[i - 1] + self.values[j - 1]) for i, j in self.scheme)


def _canonical_rep(z, tolerance):
    """The member of ``{z, -z}`` with nonnegative real part, ties broken by imaginary part.

    A real part within ``tolerance`` of zero counts as zero.
    """
    if z.real < -tolerance or (abs(z.real) <= tolerance and z.imag < 0):
        return -z
    return z


def pair_by_negation(roots, tolerance=None, scheme=None) -> RootLabeling:
    """Match each root with its negative and label the pairs by ``scheme``."""
    vals = [r.value if hasattr(r, "value") else mpmath.mpc(r) for r in roots]
    n = len(vals)
    if n % 2:
        raise NoPairing(f"odd number of roots ({n})")
    if tolerance is None:
        tolerance = mpmath.ldexp(1, -mpmath.mp.prec // 2)
    scheme = tuple(scheme or default_scheme(n))
    left = list(range(n))
    pairs = []
    while left:
        i = left.pop(0)
        j = min(left, key=lambda j: abs(vals[i] + vals[j]))
        if abs(vals[i] + vals[j]) > tolerance * max(1, abs(vals[i])):
            raise NoPairing("roots are not closed under negation")
        left.remove(j)
        rep = _canonical_rep(vals[i], tolerance)
        pairs.append(rep)
    grid = mpmath.ldexp(1, mpmath.mp.prec // 2)
    pairs.sort(key=lambda z: (int(mpmath.nint(abs(z.real) * grid)), int(mpmath.nint(abs(z.imag) * grid)),
                              z.imag))
    out = [None] * n
    for (i, j), z in zip(scheme, pairs):
        out[i - 1] = z
        out[j - 1] = -z
    return RootLabeling(tuple(out), scheme)


def pair_respecting_relabelings(labeling: RootLabeling):
    """Every relabeling that maps pairs to pairs: permutations of pairs with sign flips."""
    scheme = labeling.scheme
    k = len(scheme)
    for order in permutations(range(k)):
        for flips in product((False, True), repeat=k):
            perm = [0] * labeling.degree
            for (i, j), src, flip in zip(scheme, order, flips):
                si, sj = scheme[src]
                if flip:
                    si, sj = sj, si
                perm[i - 1], perm[j - 1] = si, sj
            yield labeling.relabel(perm)


def all_relabelings(labeling: RootLabeling):
    n = labeling.degree
    for perm in permutations(range(1, n + 1)):
        yield labeling.relabel(perm)


def label_roots(roots) -> RootLabeling:
    """Plain labeling in order of increasing real then imaginary part."""
    vals = sorted((r.value if hasattr(r, "value") else mpmath.mpc(r) for r in roots),
                  key=lambda z: (z.real, z.imag))
    return RootLabeling(tuple(vals))
