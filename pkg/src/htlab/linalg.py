"""Exact linear algebra over Q: reduced row echelon form, rank, nullspaces.

Matrices are lists of rows; rows are lists of Fractions.  All functions copy
their inputs and return canonical results, so callers can rely on identical
output for identical input.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

Row = List[Fraction]


def _copy(rows: Sequence[Sequence[Fraction]]) -> List[Row]:
    return [[Fraction(x) for x in r] for r in rows]


def rref(rows: Sequence[Sequence[Fraction]]):
    """Reduced row echelon form.

    Returns (reduced_rows, pivot_columns) with zero rows dropped, pivots
    normalized to 1 and cleared above and below.
    """
    m = _copy(rows)
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(m)):
            if m[i][c]:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pv = m[r][c]
        if pv != 1:
            m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    return len(rref(rows)[0])


def residual(rref_rows: Sequence[Row], pivots: Sequence[int], vec: Sequence[Fraction]) -> Row:
    """Reduce vec against an rref basis; zero iff vec lies in the row span."""
    v = [Fraction(x) for x in vec]
    for row, p in zip(rref_rows, pivots):
        if v[p]:
            f = v[p]
            v = [a - f * b for a, b in zip(v, row)]
    return v


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> List[Row]:
    """Canonical kernel basis of the linear map given by the matrix.

    One basis vector per free column, carrying 1 in that column; vectors are
    ordered by free column index.
    """
    red, pivots = rref(rows)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, p in zip(red, pivots):
            if row[free]:
                v[p] = -row[free]
        basis.append(v)
    return basis


def express_in_basis(basis_rows: Sequence[Sequence[Fraction]], vec: Sequence):
    """Coordinates of vec in the given (independent) row basis, or None.

    Solves B^T c = vec.  Basis rows must be rational; vec entries may be
    Fractions or any values supporting +, - and multiplication by Fraction
    (for example polynomials), in which case symbolic coordinates come back.
    Returns None when vec is outside the span or the rows are dependent.
    """
    n = len(basis_rows)
    ncols = len(vec)
    if n == 0:
        return [] if not any(vec) else None
    bt = [[Fraction(basis_rows[j][i]) for j in range(n)] for i in range(ncols)]
    rhs = list(vec)
    order = list(range(ncols))
    piv_rows = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, ncols) if bt[order[i]][c]), None)
        if pr is None:
            return None  # dependent basis rows
        order[r], order[pr] = order[pr], order[r]
        ri = order[r]
        pv = bt[ri][c]
        if pv != 1:
            bt[ri] = [x / pv for x in bt[ri]]
            rhs[ri] = rhs[ri] * (Fraction(1) / pv)
        for i in range(ncols):
            rj = order[i]
            if rj != ri and bt[rj][c]:
                f = bt[rj][c]
                bt[rj] = [a - f * b for a, b in zip(bt[rj], bt[ri])]
                rhs[rj] = rhs[rj] - rhs[ri] * f
        piv_rows.append(ri)
        r += 1
    for i in range(r, ncols):
        if rhs[order[i]]:
            return None  # vec outside the span
    return [rhs[piv_rows[c]] for c in range(n)]


def matrix_times_vector(rows: Sequence[Sequence[Fraction]], vec: Sequence[Fraction]) -> Row:
    return [sum((a * b for a, b in zip(r, vec)), Fraction(0)) for r in rows]
