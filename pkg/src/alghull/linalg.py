"""Exact linear algebra over Q on row vectors (tuples of Fractions)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Vec = tuple
Rows = list


def _frac_rows(rows) -> list[list[Fraction]]:
    return [[Fraction(x) for x in r] for r in rows]


def rref(rows: Sequence[Sequence]) -> tuple[list[tuple], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = _frac_rows(rows)
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for j in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][j] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][j]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][j] != 0:
                c = m[i][j]
                m[i] = [a - c * b for a, b in zip(m[i], m[r])]
        pivots.append(j)
        r += 1
        if r == len(m):
            break
    return [tuple(row) for row in m[:r]], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[0])


def in_rowspace(rows: Sequence[Sequence], v: Sequence) -> bool:
    if not rows:
        return all(x == 0 for x in v)
    return rank(rows) == rank(list(rows) + [v])


def solve_combination(rows: Sequence[Sequence], v: Sequence):
    """Coefficients c with sum(c_i * rows_i) = v, or None if v is outside."""
    if not rows:
        return () if all(x == 0 for x in v) else None
    # Solve the transposed system by elimination on [rows^T | v].
    nrows = len(rows)
    ncols = len(rows[0])
    aug = [[Fraction(rows[i][j]) for i in range(nrows)] + [Fraction(v[j])] for j in range(ncols)]
    reduced, pivots = rref(aug)
    sol = [Fraction(0)] * nrows
    for row, pj in zip(reduced, pivots):
        if pj == nrows:
            return None  # inconsistent
        sol[pj] = row[nrows]
    # verify (guards against free-variable subtleties)
    for j in range(ncols):
        if sum(sol[i] * Fraction(rows[i][j]) for i in range(nrows)) != Fraction(v[j]):
            return None
    return tuple(sol)


def right_kernel(rows: Sequence[Sequence]) -> list[tuple]:
    """Basis of {x : rows . x = 0} as row vectors."""
    if not rows:
        return []
    ncols = len(rows[0])
    reduced, pivots = rref(rows)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for fj in free:
        v = [Fraction(0)] * ncols
        v[fj] = Fraction(1)
        for row, pj in zip(reduced, pivots):
            v[pj] = -row[fj]
        basis.append(tuple(v))
    return basis


def rowspace_intersect(rows1: Sequence[Sequence], rows2: Sequence[Sequence], ncols: int) -> list[tuple]:
    """Basis of the intersection of two row spaces of Q^ncols."""
    if not rows1 or not rows2:
        return []
    # The annihilator of the intersection is the sum of the annihilators.
    ann = right_kernel(rows1) + right_kernel(rows2)
    if not ann:
        return [tuple(Fraction(1) if i == j else Fraction(0) for i in range(ncols)) for j in range(ncols)]
    return right_kernel([[a[j] for j in range(ncols)] for a in ann])
