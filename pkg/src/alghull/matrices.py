"""Exact matrix algebra over Q: characteristic/minimal polynomials,
Jordan decomposition, and spans of matrices with Lie bracket closure.

Matrices are tuples of row tuples with Fraction (or int) entries.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from . import polynomials as pol

Mat = tuple  # tuple of row tuples


class DimensionError(ValueError):
    pass


def as_matrix(rows: Iterable[Iterable]) -> Mat:
    m = tuple(tuple(Fraction(x) for x in row) for row in rows)
    if m and any(len(row) != len(m[0]) for row in m):
        raise DimensionError("ragged matrix")
    return m


def is_square(m: Mat) -> bool:
    return all(len(row) == len(m) for row in m)


def identity(n: int) -> Mat:
    return tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(n)) for i in range(n)
    )


def zero(n: int) -> Mat:
    return tuple(tuple(Fraction(0) for _ in range(n)) for _ in range(n))


def mat_add(a: Mat, b: Mat) -> Mat:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a: Mat, b: Mat) -> Mat:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(a: Mat, c) -> Mat:
    return tuple(tuple(x * c for x in row) for row in a)


def mat_mul(a: Mat, b: Mat) -> Mat:
    if len(a[0]) != len(b):
        raise DimensionError("incompatible shapes for multiplication")
    bt = list(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_eq(a: Mat, b: Mat) -> bool:
    return len(a) == len(b) and all(
        all(x == y for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


def is_zero_matrix(a: Mat) -> bool:
    return all(x == 0 for row in a for x in row)


def trace(a: Mat):
    return sum(a[i][i] for i in range(len(a)))


def flatten(a: Mat) -> tuple:
    return tuple(x for row in a for x in row)


def unflatten(v: Sequence, n: int) -> Mat:
    return tuple(tuple(Fraction(x) for x in v[i * n : (i + 1) * n]) for i in range(n))


def mat_inverse(a: Mat) -> Mat:
    """Exact inverse by Gauss-Jordan; raises on singular input."""
    n = len(a)
    aug = [[Fraction(a[i][j]) for j in range(n)] + [Fraction(1) if i == k else Fraction(0) for k in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                c = aug[r][col]
                aug[r] = [x - c * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(aug[i][n:]) for i in range(n))


def eval_poly(f, x: Mat) -> Mat:
    """Evaluate a polynomial (constant first) at a square matrix."""
    n = len(x)
    acc = zero(n)
    for c in reversed(f):
        acc = mat_mul(acc, x) if not is_zero_matrix(acc) else acc
        if c != 0:
            acc = mat_add(acc, mat_scale(identity(n), c))
    return acc


def char_poly(x: Mat):
    """Monic characteristic polynomial det(tI - X), exact over Q.

    Uses similarity reduction to Hessenberg form followed by the standard
    recurrence on leading principal Hessenberg blocks.
    """
    if not is_square(x):
        raise DimensionError("characteristic polynomial needs a square matrix")
    n = len(x)
    if n == 0:
        return (1,)
    h = [[Fraction(v) for v in row] for row in x]
    # Hessenberg reduction by similarity transformations.
    for j in range(n - 2):
        pivot = next((i for i in range(j + 1, n) if h[i][j] != 0), None)
        if pivot is None:
            continue
        if pivot != j + 1:
            h[j + 1], h[pivot] = h[pivot], h[j + 1]
            for row in h:
                row[j + 1], row[pivot] = row[pivot], row[j + 1]
        for i in range(j + 2, n):
            if h[i][j] != 0:
                c = h[i][j] / h[j + 1][j]
                h[i] = [a - c * b for a, b in zip(h[i], h[j + 1])]
                for row in h:
                    row[j + 1] += c * row[i]
    # p_m(t) = charpoly of the leading m x m block.
    polys = [(Fraction(1),)]  # p_0 = 1
    for m in range(1, n + 1):
        term = pol.mul(pol.sub((Fraction(0), Fraction(1)), (h[m - 1][m - 1],)), polys[m - 1])
        prod = Fraction(1)
        for i in range(m - 2, -1, -1):
            prod *= h[i + 1][i]
            term = pol.sub(term, pol.scale(polys[i], h[i][m - 1] * prod))
        polys.append(term)
    return polys[n]


def min_poly(x: Mat):
    """Monic minimal polynomial via linear dependency of I, X, X^2, ..."""
    if not is_square(x):
        raise DimensionError("minimal polynomial needs a square matrix")
    n = len(x)
    if n == 0:
        return (1,)
    powers = [identity(n)]
    rows = [flatten(powers[0])]
    while True:
        nxt = mat_mul(powers[-1], x)
        coeffs = linalg.solve_combination(rows, flatten(nxt))
        if coeffs is not None:
            # X^t+1 = sum c_i X^i  ->  min poly = x^(t+1) - sum c_i x^i
            return tuple(-c for c in coeffs) + (Fraction(1),)
        powers.append(nxt)
        rows.append(flatten(nxt))


def squarefree_part(f):
    """Squarefree part of a nonzero polynomial, monic."""
    return pol.squarefree_part(f)


def power_basis(x: Mat) -> "MatrixSpan":
    """[I, X, ..., X^t] with t+1 the degree of the minimal polynomial."""
    t = pol.degree(min_poly(x)) - 1
    n = len(x)
    mats = [identity(n)]
    for _ in range(t):
        mats.append(mat_mul(mats[-1], x))
    return MatrixSpan(mats)


def jordan_decomposition(x: Mat) -> tuple[Mat, Mat]:
    """Chevalley-Jordan decomposition X = S + N over Q.

    S is semisimple, N nilpotent, S N = N S, and both are polynomials in X.
    S is computed by Newton iteration on the squarefree part g of the
    minimal polynomial: S <- S - g(S) g'(S)^-1, staying inside A_Q(X).
    """
    if not is_square(x):
        raise DimensionError("Jordan decomposition needs a square matrix")
    n = len(x)
    mp = min_poly(x)
    g = pol.squarefree_part(mp)
    if pol.degree(g) == pol.degree(mp):
        return x, zero(n)
    gp = pol.derivative(g)
    s = x
    for _ in range(max(1, math.ceil(math.log2(max(n, 2)))) + 1):
        gs = eval_poly(g, s)
        if is_zero_matrix(gs):
            break
        s = mat_sub(s, mat_mul(gs, mat_inverse(eval_poly(gp, s))))
    if not is_zero_matrix(eval_poly(g, s)):
        raise RuntimeError("Newton iteration for the semisimple part did not converge")
    return s, mat_sub(x, s)


def companion(f) -> Mat:
    """Companion matrix of a monic polynomial (constant term first)."""
    if not pol.is_monic(f):
        raise ValueError("companion matrix needs a monic polynomial")
    n = pol.degree(f)
    return as_matrix(
        [
            [
                -f[i] if j == n - 1 else (1 if j == i - 1 else 0)
                for j in range(n)
            ]
            for i in range(n)
        ]
    )


def lie_bracket(a: Mat, b: Mat) -> Mat:
    if len(a) != len(b) or not is_square(a) or not is_square(b):
        raise DimensionError("Lie bracket needs square matrices of equal size")
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


class MatrixSpan:
    """A Q-span of n x n matrices, stored as a linearly independent basis."""

    def __init__(self, mats: Iterable[Mat], n: int | None = None):
        mats = [as_matrix(m) for m in mats]
        if mats:
            n = len(mats[0])
            if any(len(m) != n or not is_square(m) for m in mats):
                raise DimensionError("span elements must be square and equally sized")
        elif n is None:
            raise DimensionError("empty span needs an explicit ambient dimension")
        rows = [flatten(m) for m in mats]
        if linalg.rank(rows) != len(rows):
            raise ValueError("span basis is linearly dependent")
        self.n = n
        self.basis = tuple(mats)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, a: Mat) -> bool:
        a = as_matrix(a)
        if len(a) != self.n:
            raise DimensionError("dimension mismatch")
        return linalg.in_rowspace([flatten(m) for m in self.basis], flatten(a))

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatrixSpan):
            return NotImplemented
        return (
            self.n == other.n
            and self.dim == other.dim
            and all(self.contains(m) for m in other.basis)
        )

    def __hash__(self):
        raise TypeError("MatrixSpan is unhashable")


def span_of(mats: Iterable[Mat], n: int | None = None) -> MatrixSpan:
    """Span of arbitrary (possibly dependent) matrices."""
    mats = [as_matrix(m) for m in mats]
    if mats:
        n = len(mats[0])
    elif n is None:
        raise DimensionError("empty span needs an explicit ambient dimension")
    basis: list[Mat] = []
    rows: list[tuple] = []
    for m in mats:
        v = flatten(m)
        if not linalg.in_rowspace(rows, v):
            basis.append(m)
            rows.append(v)
    return MatrixSpan(basis, n=n)


def span_sum(s1: MatrixSpan, s2: MatrixSpan) -> MatrixSpan:
    if s1.n != s2.n:
        raise DimensionError("dimension mismatch")
    return span_of(list(s1.basis) + list(s2.basis), n=s1.n)


def span_intersect(s1: MatrixSpan, s2: MatrixSpan) -> MatrixSpan:
    if s1.n != s2.n:
        raise DimensionError("dimension mismatch")
    n = s1.n
    rows1 = [flatten(m) for m in s1.basis]
    rows2 = [flatten(m) for m in s2.basis]
    inter = linalg.rowspace_intersect(rows1, rows2, n * n)
    return MatrixSpan([unflatten(v, n) for v in inter], n=n)


def bracket_closure(s: MatrixSpan) -> MatrixSpan:
    """Smallest Lie subalgebra of gl(n, Q) containing the span."""
    current = s
    while True:
        extra = []
        for i in range(current.dim):
            for j in range(i + 1, current.dim):
                br = lie_bracket(current.basis[i], current.basis[j])
                if not current.contains(br):
                    extra.append(br)
        if not extra:
            return current
        current = span_of(list(current.basis) + extra, n=current.n)
