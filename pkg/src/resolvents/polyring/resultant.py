"""Sylvester resultants via fraction-free (Bareiss) determinants."""

from __future__ import annotations

from ..errors import ZeroPolynomial
from .poly import MultiPoly, exact_div


def sylvester_matrix(p: MultiPoly, q: MultiPoly, var: str) -> list:
    m, n = p.degree(var), q.degree(var)
    pc, qc = p.coeffs_in(var), q.coeffs_in(var)
    zero = MultiPoly.const(0)
    size = m + n
    rows = []
    for i in range(n):
        row = [zero] * size
        for k in range(m + 1):
            row[i + m - k] = pc.get(k, zero)
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k in range(n + 1):
            row[i + n - k] = qc.get(k, zero)
        rows.append(row)
    return rows


def bareiss_det(matrix: list) -> MultiPoly:
    """Determinant of a square matrix with polynomial entries, all divisions exact."""
    M = [list(row) for row in matrix]
    n = len(M)
    if n == 0:
        return MultiPoly.const(1)
    sign = 1
    prev = MultiPoly.const(1)
    for k in range(n - 1):
        if M[k][k].is_zero():
            for i in range(k + 1, n):
                if not M[i][k].is_zero():
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return MultiPoly.const(0)
        pivot = M[k][k]
        for i in range(k + 1, n):
            mik = M[i][k]
            for j in range(k + 1, n):
                num = pivot * M[i][j] - mik * M[k][j]
                M[i][j] = exact_div(num, prev) if not prev.is_constant() or prev.constant_value() != 1 else num
            M[i][k] = MultiPoly.const(0)
        prev = pivot
    det = M[n - 1][n - 1]
    return -det if sign < 0 else det


def resultant(p: MultiPoly, q: MultiPoly, var: str) -> MultiPoly:
    """``Res_var(p, q) = lc(p)^deg(q) * prod q(rho)`` over the roots rho of p."""
    if p.is_zero() or q.is_zero():
        raise ZeroPolynomial("resultant of a zero polynomial")
    m, n = p.degree(var), q.degree(var)
    if m == 0:
        return p ** n
    if n == 0:
        return q ** m
    return bareiss_det(sylvester_matrix(p, q, var))


def discriminant_nonzero(p: MultiPoly, var: str) -> bool:
    """True iff ``p`` (over a field of constants) has no repeated root in ``var``."""
    if p.degree(var) <= 1:
        return True
    return not resultant(p, p.diff(var), var).is_zero()
