"""Exact linear systems over Q by fraction-free elimination."""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from ..errors import InconsistentSystem
from .poly import as_rational


def _integer_row(row) -> list:
    den = 1
    for c in row:
        if type(c) is Fraction:
            den = lcm(den, c.denominator)
    return [int(c * den) for c in row]


def solve_rational(A: list, b: list) -> tuple:
    """Solve ``A x = b`` exactly.

    Returns ``(x, rank)`` where ``x`` is a particular solution with every free
    unknown set to zero.  Raises :class:`InconsistentSystem` if there is none.
    """
    nrows = len(A)
    ncols = len(A[0]) if A else 0
    M = [_integer_row([as_rational(c) for c in row] + [as_rational(r)]) for row, r in zip(A, b)]
    pivots = []
    prev = 1
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if M[i][col]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        p = M[r][col]
        for i in range(r + 1, nrows):
            f = M[i][col]
            if f:
                M[i] = [(p * x - f * y) // prev for x, y in zip(M[i], M[r])]
            elif prev != 1 or p != 1:
                M[i] = [(p * x) // prev for x in M[i]]
        prev = p
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if M[i][ncols]:
            raise InconsistentSystem("linear system has no solution")
    x = [0] * ncols
    for i in reversed(range(r)):
        col = pivots[i]
        s = Fraction(M[i][ncols])
        for j in range(col + 1, ncols):
            if M[i][j] and x[j]:
                s -= M[i][j] * x[j]
        val = s / M[i][col]
        x[col] = val.numerator if val.denominator == 1 else val
    return x, r
