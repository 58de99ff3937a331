"""Integer lattices and modular linear algebra.

LLL reduction (exact rationals), row Hermite normal form, nullspaces over
Z/p^k (Howell form, which handles the zero divisors correctly), rational
reconstruction, and saturation of rational row spans to Z-bases.

Matrices are tuples of row tuples of ints (rationals for saturate input).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from . import linalg


def _int_rows(rows) -> list[list[int]]:
    return [[int(x) for x in r] for r in rows]


# -------------------------------------------------------------------- LLL

def lll_reduce(rows: Sequence[Sequence[int]], delta: Fraction = Fraction(3, 4)):
    """LLL-reduced basis of the lattice generated by the rows.

    Exact rational Gram-Schmidt; rows must be linearly independent.  With
    the default delta = 3/4 every output row b_i satisfies
    ||b_i||^2 <= 2^(n-1) M^2 whenever the lattice contains n independent
    vectors of norm at most M.
    """
    if not (Fraction(1, 4) < Fraction(delta) < 1):
        raise ValueError("delta must lie in (1/4, 1)")
    delta = Fraction(delta)
    b = [[int(x) for x in row] for row in rows]
    n = len(b)
    if n == 0:
        return ()
    if linalg.rank(b) != n:
        raise ValueError("lll_reduce needs linearly independent rows")

    mu, norms = gram_schmidt_data(b)

    def reduce_row(i, j):
        if abs(mu[i][j]) > Fraction(1, 2):
            q = round(mu[i][j])
            b[i] = [x - q * y for x, y in zip(b[i], b[j])]
            for l in range(j):
                mu[i][l] -= q * mu[j][l]
            mu[i][j] -= q

    i = 1
    while i < n:
        reduce_row(i, i - 1)
        if norms[i] >= (delta - mu[i][i - 1] ** 2) * norms[i - 1]:
            for j in range(i - 2, -1, -1):
                reduce_row(i, j)
            i += 1
        else:
            # swap rows i-1, i and patch the Gram-Schmidt data in place
            m = mu[i][i - 1]
            new_norm = norms[i] + m * m * norms[i - 1]
            mu[i][i - 1] = m * norms[i - 1] / new_norm
            norms[i] = norms[i - 1] * norms[i] / new_norm
            norms[i - 1] = new_norm
            b[i - 1], b[i] = b[i], b[i - 1]
            for j in range(i - 1):
                mu[i - 1][j], mu[i][j] = mu[i][j], mu[i - 1][j]
            for l in range(i + 1, n):
                t = mu[l][i]
                mu[l][i] = mu[l][i - 1] - m * t
                mu[l][i - 1] = t + mu[i][i - 1] * mu[l][i]
            i = max(i - 1, 1)
    return tuple(tuple(row) for row in b)


def gram_schmidt_data(rows: Sequence[Sequence[int]]):
    """(mu, squared norms of the orthogonalized rows), exact over Q."""
    n = len(rows)
    mu = [[Fraction(0)] * n for _ in range(n)]
    bstar = []
    norms = []
    for i in range(n):
        v = [Fraction(x) for x in rows[i]]
        for j in range(i):
            mu[i][j] = sum(Fraction(x) * y for x, y in zip(rows[i], bstar[j])) / norms[j]
            v = [x - mu[i][j] * y for x, y in zip(v, bstar[j])]
        bstar.append(v)
        norms.append(sum(x * x for x in v))
    return mu, norms


def is_lll_reduced(rows, delta: Fraction = Fraction(3, 4)) -> bool:
    mu, norms = gram_schmidt_data(rows)
    n = len(rows)
    for i in range(n):
        for j in range(i):
            if abs(mu[i][j]) > Fraction(1, 2):
                return False
    for i in range(1, n):
        if norms[i] < (Fraction(delta) - mu[i][i - 1] ** 2) * norms[i - 1]:
            return False
    return True


# -------------------------------------------------------------------- HNF

def hnf(rows: Sequence[Sequence[int]]):
    """Row Hermite normal form (zero rows dropped).

    Canonical: two generating sets span the same lattice iff their HNFs
    are identical.  Pivots are positive, entries above a pivot reduced to
    [0, pivot).
    """
    m = _int_rows(rows)
    if not m:
        return ()
    ncols = len(m[0])
    out = []
    row = 0
    for col in range(ncols):
        # gcd elimination in this column below `row`
        pivot = None
        for i in range(row, len(m)):
            if m[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        for i in range(row + 1, len(m)):
            while m[i][col]:
                q = m[i][col] // m[row][col]
                m[i] = [a - q * b for a, b in zip(m[i], m[row])]
                if m[i][col]:
                    m[row], m[i] = m[i], m[row]
        if m[row][col] < 0:
            m[row] = [-a for a in m[row]]
        for i in range(row):
            q = m[i][col] // m[row][col]
            if q:
                m[i] = [a - q * b for a, b in zip(m[i], m[row])]
        row += 1
        if row == len(m):
            break
    return tuple(tuple(r) for r in m[:row])


def lattice_eq(rows1, rows2) -> bool:
    return hnf(rows1) == hnf(rows2)


def kernel_int(rows: Sequence[Sequence[int]]):
    """Z-basis of the left integer kernel {x in Z^m : x rows = 0}.

    Works by running HNF column elimination on [rows | I] and collecting
    the transform rows whose image part vanished.  The result generates a
    saturated sublattice of Z^m (it is the full kernel).
    """
    m = _int_rows(rows)
    nrows = len(m)
    if nrows == 0:
        return ()
    ncols = len(m[0])
    aug = [m[i] + [1 if j == i else 0 for j in range(nrows)] for i in range(nrows)]
    row = 0
    for col in range(ncols):
        pivot = next((i for i in range(row, nrows) if aug[i][col]), None)
        if pivot is None:
            continue
        aug[row], aug[pivot] = aug[pivot], aug[row]
        for i in range(row + 1, nrows):
            while aug[i][col]:
                q = aug[i][col] // aug[row][col]
                aug[i] = [a - q * b for a, b in zip(aug[i], aug[row])]
                if aug[i][col]:
                    aug[row], aug[i] = aug[i], aug[row]
        row += 1
        if row == nrows:
            break
    kernel = [tuple(r[ncols:]) for r in aug[row:] if all(x == 0 for x in r[:ncols])]
    return tuple(kernel)


# ------------------------------------------------------------------ Z/p^k

def howell(rows: Sequence[Sequence[int]], p: int, k: int):
    """Howell (strong echelon) form of the row module over Z/p^k.

    Canonical generating set: every element of the row module whose first
    nonzero coordinate is in column j is reachable from the rows with
    pivot column >= j.  Needed because Z/p^k has zero divisors.
    """
    mod = p**k
    m = [[x % mod for x in r] for r in rows]
    if not m:
        return ()
    ncols = len(m[0])
    work = list(m)
    out = []
    for col in range(ncols):
        # pick row with minimal p-valuation in this column
        best = None
        for i, r in enumerate(work):
            if r[col]:
                v = 0
                x = r[col]
                while x % p == 0:
                    x //= p
                    v += 1
                if best is None or v < best[1]:
                    best = (i, v)
        if best is None:
            continue
        i, v = best
        r = work.pop(i)
        # normalize pivot to p^v (multiply by inverse of the unit part)
        unit = r[col] // p**v
        inv = pow(unit, -1, mod)
        r = [(x * inv) % mod for x in r]
        # eliminate this column in remaining rows
        for j, w in enumerate(work):
            if w[col]:
                q = w[col] // p**v
                work[j] = [(a - q * b) % mod for a, b in zip(w, r)]
        # torsion complement: p^(k-v) * r has pivot 0, keep its tail
        if v > 0:
            t = [(x * p ** (k - v)) % mod for x in r]
            if any(t):
                work.append(t)
        out.append(r)
    # reduce above pivots
    for idx in range(len(out) - 1, -1, -1):
        r = out[idx]
        col = next(c for c, x in enumerate(r) if x)
        pv = r[col]
        for jdx in range(idx):
            w = out[jdx]
            if w[col]:
                q = w[col] // pv
                out[jdx] = [(a - q * b) % mod for a, b in zip(w, r)]
    return tuple(tuple(r) for r in out)


def nullspace_mod(rows: Sequence[Sequence[int]], p: int, k: int):
    """Generators of {v : v rows = 0 mod p^k}, in Howell form.

    Runs Howell on the augmented block [rows | I]; augmented rows whose
    image block vanished generate the left nullspace (including torsion
    generators such as p^j times a unit vector).
    """
    mod = p**k
    m = [[x % mod for x in r] for r in rows]
    nrows = len(m)
    if nrows == 0:
        return ()
    ncols = len(m[0])
    aug = [tuple(m[i]) + tuple(1 if j == i else 0 for j in range(nrows)) for i in range(nrows)]
    h = howell(aug, p, k)
    kernel = [r[ncols:] for r in h if all(x == 0 for x in r[:ncols])]
    return howell(kernel, p, k) if kernel else ()


def rational_reconstruction(a: int, m: int):
    """Unique u/v with |u|, v <= floor(sqrt(m/2)), gcd(v, m) = 1 and
    u = a v mod m, or None when no such fraction exists.

    Half-extended Euclid on (m, a) with early stop at the bound.
    """
    if not 0 <= a < m:
        raise ValueError("need 0 <= a < m")
    bound = math.isqrt(m // 2)
    r0, r1 = m, a
    t0, t1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    u, v = r1, t1
    if v < 0:
        u, v = -u, -v
    if v == 0 or v > bound or abs(u) > bound or math.gcd(v, m) != 1:
        return None
    if (u - a * v) % m != 0:
        return None
    return Fraction(u, v)


# -------------------------------------------------------------- saturation

def saturate(rows: Sequence[Sequence]):
    """Z-basis of V ∩ Z^s for the Q-span V of the rows.

    Clears denominators, then replaces the resulting lattice by its
    saturation via the transpose-kernel method: the integer kernel of the
    transposed relation matrix is automatically saturated, so computing
    ker(ker(A)^T restricted appropriately) recovers V ∩ Z^s exactly.
    """
    frac = [[Fraction(x) for x in r] for r in rows]
    frac = [r for r in frac if any(r)]
    if not frac:
        return ()
    ncols = len(frac[0])
    ints = []
    for r in frac:
        d = 1
        for x in r:
            d = d * x.denominator // math.gcd(d, x.denominator)
        ints.append([int(x * d) for x in r])
    # annihilator of V in Z^ncols, then its integer kernel: a saturated
    # lattice with Q-span exactly V.
    ann = kernel_int([list(col) for col in zip(*ints)])
    if not ann:
        return hnf([[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)])
    sat = kernel_int([list(col) for col in zip(*ann)])
    return hnf(sat)
