"""Integer relations among algebraic numbers, with certified bounds.

Given a monic squarefree integral polynomial f with roots a_1..a_n and
integral expressions g_1..g_s in the roots, this module decides provably
whether a single expression vanishes and computes a Z-basis of

    Lambda = {e in Z^s : e_1 g_1(a) + ... + e_s g_s(a) = 0}.

Everything runs through approximate roots in an unramified extension of
Q_p; no splitting field is ever constructed.  Two routes are available:
an LLL-based one and one that accumulates constraints from a permutation
action on the roots.  A "proven" run picks the p-adic precision from a
norm bound so the answers are unconditionally correct; a "heuristic" run
starts with a small precision and verifies its candidates afterwards.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import galois as galois_mod
from . import lattice, padic


class EscalationExhausted(RuntimeError):
    """The iterative relation search hit its round cap before converging."""


# ------------------------------------------------------------------ types

@dataclass(frozen=True)
class ExponentPolynomial:
    """Integer-coefficient sparse polynomial in x_1..x_n.

    terms is a tuple of (coefficient, exponent-vector) pairs; all
    exponent vectors have the same length n.
    """

    terms: tuple

    def __post_init__(self):
        terms = tuple((int(c), tuple(int(e) for e in exps)) for c, exps in self.terms)
        if terms:
            n = len(terms[0][1])
            if any(len(exps) != n for _, exps in terms):
                raise ValueError("inconsistent exponent vector lengths")
            if any(e < 0 for _, exps in terms for e in exps):
                raise ValueError("negative exponent")
        object.__setattr__(self, "terms", terms)

    @classmethod
    def variable(cls, i: int, n: int) -> "ExponentPolynomial":
        """The target x_{i+1} (0-indexed i) in n variables."""
        return cls(((1, tuple(1 if j == i else 0 for j in range(n))),))

    @classmethod
    def power_sum(cls, coeffs: Sequence[int], power: int) -> "ExponentPolynomial":
        """sum_k coeffs[k] * x_{k+1}^power."""
        n = len(coeffs)
        return cls(
            tuple(
                (int(c), tuple(power if j == k else 0 for j in range(n)))
                for k, c in enumerate(coeffs)
                if c
            )
        )

    @property
    def nvars(self) -> int:
        return len(self.terms[0][1]) if self.terms else 0

    def is_zero_poly(self) -> bool:
        return all(c == 0 for c, _ in self.terms)


@dataclass(frozen=True)
class TargetSet:
    f: tuple
    targets: tuple

    def __post_init__(self):
        f = tuple(int(c) for c in self.f)
        if not f or f[-1] != 1:
            raise ValueError("f must be monic with integer coefficients")
        targets = tuple(self.targets)
        if not targets:
            raise ValueError("need at least one target")
        n = len(f) - 1
        for g in targets:
            if g.terms and g.nvars != n:
                raise ValueError("target variable count must equal deg f")
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "targets", targets)

    @property
    def s(self) -> int:
        return len(self.targets)


@dataclass(frozen=True)
class BoundData:
    """The certified quantities behind a relation computation.

    M_prime bounds every complex root of f; M bounds every complex
    embedding of every target; r bounds the degree of the field the
    targets live in; N bounds the sup-norm of some Z-basis of Lambda;
    k is the p-adic precision exponent actually used and lam the column
    scaling of the LLL block matrix (1 for the permutation route).
    """

    M_prime: int
    M: int
    r: int
    N: int
    k: int
    lam: int
    p: int
    f_p: int


@dataclass(frozen=True)
class RelationBasis:
    rows: tuple
    certification: str  # "proven" | "heuristic-verified"
    bounds: BoundData
    verification_k: int | None = None

    @property
    def rank(self) -> int:
        return len(self.rows)


# ----------------------------------------------------------------- bounds

def complex_root_bound(f: Sequence[int]) -> int:
    """Cauchy bound 1 + max|a_i| on the complex roots of monic f."""
    f = tuple(int(c) for c in f)
    if f[-1] != 1:
        raise ValueError("f must be monic")
    return 1 + max((abs(c) for c in f[:-1]), default=0)


def embedding_bound(g: ExponentPolynomial, m_prime: int) -> int:
    """Bound on |g(y_1..y_n)| over all complex y_i with |y_i| <= m_prime."""
    return sum(abs(c) * m_prime ** sum(exps) for c, exps in g.terms)


def degree_bound(f: Sequence[int], group_order: int | None = None) -> int:
    """Upper bound on the degree of the splitting field of f over Q."""
    if group_order is not None:
        if group_order < 1:
            raise ValueError("group order must be positive")
        return int(group_order)
    return math.factorial(max(len(f) - 1, 1))


def masser_bound(s: int, m: int) -> int:
    """N = s^(s-1) M^(s-1): some Z-basis of Lambda has sup-norm <= N."""
    if s < 1 or m < 1:
        raise ValueError("need s >= 1 and M >= 1")
    return s ** (s - 1) * m ** (s - 1)


def proven_precision(p: int, f_p: int, base: int, r: int) -> int:
    """Least k >= 1 with p^(k f_p) > base^r.

    Any nonzero algebraic integer with all conjugates bounded by `base`
    and degree at most r has |norm| <= base^r, so vanishing mod p^k in a
    degree-f_p unramified ring at this k forces true vanishing.
    """
    target = max(int(base), 1) ** r
    k = max(1, math.floor(r * math.log(max(base, 2)) / (f_p * math.log(p))) - 2)
    while p ** (k * f_p) <= target:
        k += 1
    while k > 1 and p ** ((k - 1) * f_p) > target:
        k -= 1
    return k


# -------------------------------------------------------------- zero test

def _resolve_prime(f, prime, prefer="min", search_limit=20):
    if prime is None:
        return padic.select_prime(f, search_limit=search_limit, prefer=prefer)
    p = int(prime)
    if not padic.is_admissible(f, p):
        raise ValueError(f"prime {p} is not admissible (f not squarefree mod {p})")
    degs = padic.factor_degrees(f, p)
    return padic.PrimeSelection(p, math.lcm(*degs), degs)


def zero_test(
    g: ExponentPolynomial,
    f: Sequence[int],
    mode: str = "proven",
    prime: int | None = None,
    group_order: int | None = None,
    k: int | None = None,
    seed: int = 0,
) -> tuple[bool, BoundData]:
    """Decide whether g vanishes at the root vector of f.

    Proven mode chooses the precision from the norm bound and the answer
    is certified both ways.  Heuristic mode uses the caller-supplied k
    (required) and the answer is only as good as that precision.
    """
    f = tuple(int(c) for c in f)
    if g.is_zero_poly():
        sel = _resolve_prime(f, prime)
        return True, BoundData(1, 1, 1, 1, 1, 1, sel.p, sel.f_p)
    sel = _resolve_prime(f, prime)
    m_prime = complex_root_bound(f)
    m = max(embedding_bound(g, m_prime), 1)
    r = degree_bound(f, group_order)
    k_proven = proven_precision(sel.p, sel.f_p, m, r)
    if mode == "proven":
        k_use = k_proven
    elif mode == "heuristic":
        if k is None:
            raise ValueError("heuristic mode needs an explicit precision k")
        k_use = min(int(k), k_proven)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    roots = padic.cached_roots(f, sel.p, sel.f_p, k_use, seed)
    value = padic.eval_target(g, roots)
    answer = padic.valuation(value) >= k_use
    bounds = BoundData(m_prime, m, r, 1, k_use, 1, sel.p, sel.f_p)
    return answer, bounds


def is_zero(g, f, mode: str = "proven", prime: int | None = None, **kw) -> bool:
    return zero_test(g, f, mode=mode, prime=prime, **kw)[0]


def _combination(targets: TargetSet, e: Sequence[int]) -> ExponentPolynomial:
    terms = []
    for c, g in zip(e, targets.targets):
        if c:
            terms.extend((int(c) * tc, exps) for tc, exps in g.terms)
    return ExponentPolynomial(tuple(terms))


def _verify_rows(rows, targets: TargetSet, prime, group_order, seed) -> bool:
    return all(
        is_zero(_combination(targets, e), targets.f, mode="proven",
                prime=prime, group_order=group_order, seed=seed)
        for e in rows
    )


# -------------------------------------------------------------- LLL route

def _shared_bounds(targets: TargetSet, group_order):
    m_prime = complex_root_bound(targets.f)
    m = max(max((embedding_bound(g, m_prime) for g in targets.targets)), 1)
    r = degree_bound(targets.f, group_order)
    n_bound = masser_bound(targets.s, m)
    return m_prime, m, r, n_bound


def _lll_extract(targets: TargetSet, sel, k: int, lam: int, threshold_sq: int,
                 delta, seed: int):
    """One pass of the block-matrix construction: lift, reduce, extract."""
    s = targets.s
    f_p = sel.f_p
    roots = padic.cached_roots(targets.f, sel.p, f_p, k, seed)
    b_rows = [padic.eval_target(g, roots).coeffs for g in targets.targets]
    pk = sel.p**k
    big = []
    for i in range(s):
        big.append(
            tuple(1 if j == i else 0 for j in range(s))
            + tuple(lam * c for c in b_rows[i])
        )
    for j in range(f_p):
        big.append(
            (0,) * s + tuple(lam * pk if l == j else 0 for l in range(f_p))
        )
    reduced = lattice.lll_reduce(big, delta=delta)
    found = []
    for row in reduced:
        lead, tail = row[:s], row[s:]
        if any(tail):
            continue
        if sum(x * x for x in lead) <= threshold_sq and any(lead):
            found.append(lead)
    return found


def _finalize(rows, delta):
    if not rows:
        return ()
    sat = lattice.saturate(rows)
    return lattice.lll_reduce(sat, delta=delta) if sat else ()


def find_relations_lll(
    targets: TargetSet,
    mode: str = "proven",
    prime: int | None = None,
    group_order: int | None = None,
    delta: Fraction = Fraction(3, 4),
    seed: int = 0,
) -> RelationBasis:
    """Z-basis of the relation lattice via the scaled LLL block matrix.

    The big matrix has rows (e_i | lam * B_i) over (0 | lam p^k I), where
    B_i is the coefficient vector of the lifted value of g_i.  At proven
    precision the rows of the reduced basis whose trailing block vanishes
    and whose leading block stays under the size threshold are exactly a
    generating set of Lambda; each is re-verified independently anyway.
    """
    sel = _resolve_prime(targets.f, prime)
    s = targets.s
    m_prime, m, r, n_bound = _shared_bounds(targets, group_order)
    # Size threshold for genuine rows: Lambda has a basis of sup-norm
    # <= N, so the reduced basis starts with rows of squared 2-norm at
    # most 2^(s+f_p-1) * s * N^2.
    threshold_sq = 2 ** (s + sel.f_p - 1) * s * n_bound**2
    lam = max(n_bound**2 * 2 ** (s - 1), math.isqrt(threshold_sq) + 2)
    # Precision so that any trailing-zero row under the threshold is a
    # certified relation, not just a mod-p^k coincidence.
    t_bound = math.isqrt(threshold_sq) + 1
    k_proven = proven_precision(sel.p, sel.f_p, t_bound * m * s, r)

    def pass_at(k):
        rows = _lll_extract(targets, sel, k, lam, threshold_sq, delta, seed)
        rows = [
            e for e in rows
            if is_zero(_combination(targets, e), targets.f, mode="proven",
                       prime=sel.p, group_order=group_order, seed=seed)
        ]
        return _finalize(rows, delta)

    if mode == "proven":
        final = pass_at(k_proven)
        bounds = BoundData(m_prime, m, r, n_bound, k_proven, lam, sel.p, sel.f_p)
        return RelationBasis(tuple(final), "proven", bounds)
    if mode != "heuristic":
        raise ValueError(f"unknown mode {mode!r}")

    k = min(max(1, math.ceil(1.5 * math.log(max(n_bound, 2)) / math.log(sel.p))),
            k_proven)
    cur = pass_at(k)
    while k < k_proven:
        k2 = min(2 * k, k_proven)
        nxt = pass_at(k2)
        if lattice.hnf(cur) == lattice.hnf(nxt):
            bounds = BoundData(m_prime, m, r, n_bound, k, lam, sel.p, sel.f_p)
            return RelationBasis(tuple(cur), "heuristic-verified", bounds,
                                 verification_k=k2)
        k, cur = k2, nxt
    bounds = BoundData(m_prime, m, r, n_bound, k_proven, lam, sel.p, sel.f_p)
    return RelationBasis(tuple(cur), "proven", bounds)


# ------------------------------------------------------ permutation route

def _eval_permuted(g: ExponentPolynomial, roots: padic.ApproxRoots, sigma):
    permuted = padic.ApproxRoots(
        roots.ring, tuple(roots.roots[sigma[j]] for j in range(len(sigma))), roots.poly
    )
    return padic.eval_target(g, permuted)


def _reconstruct_rows(ns_rows, p: int, k: int):
    """Rational rows from a Howell-form nullspace over Z/p^k.

    Rows whose pivot is p^a with a > 0 carry torsion: if every entry is
    divisible by p^a the row is descaled and reconstructed at the reduced
    modulus p^(k-a); rows living entirely in the top half of the
    precision are discarded as junk.  Returns None when any genuine row
    fails reconstruction (the caller must escalate).
    """
    mod = p**k
    out = []
    for row in ns_rows:
        pivot = next((x for x in row if x), 0)
        if pivot == 0:
            continue
        a = 0
        x = pivot
        while x % p == 0:
            x //= p
            a += 1
        if 2 * a >= k:
            continue  # pivot in the top half of the precision: junk
        rec = [lattice.rational_reconstruction(x % mod, mod) for x in row]
        if all(v is not None for v in rec):
            out.append(tuple(rec))
            continue
        # a scaled genuine row p^a * (unit-pivot row): descale and retry
        # at the reduced modulus
        pa = p**a
        if a > 0 and all(x % pa == 0 for x in row):
            sub = p ** (k - a)
            rec = [lattice.rational_reconstruction((x // pa) % sub, sub) for x in row]
            if all(v is not None for v in rec):
                out.append(tuple(rec))
                continue
        return None
    return out


def find_relations_galois(
    targets: TargetSet,
    group: "galois_mod.PermGroup",
    mode: str = "proven",
    prime: int | None = None,
    group_order: int | None = None,
    seed: int = 0,
    max_rounds: int = 60,
) -> RelationBasis:
    """Z-basis of the relation lattice via a permutation action on roots.

    For every sigma in a growing subset S of the group, the coefficient
    block of each g_i evaluated at the sigma-permuted roots is appended
    as extra columns; the nullspace mod p^k of the stacked matrix is
    rationally reconstructed, saturated and LLL-reduced.  On any
    reconstruction failure S grows by at most 20 percent and k by 20
    percent.  The loop exits only when all rows are within the norm
    bound N and each passes the proven zero test.
    """
    n = len(targets.f) - 1
    if group.degree != n:
        raise ValueError("group degree must equal deg f")
    sel = _resolve_prime(targets.f, prime, prefer="max")
    s = targets.s
    m_prime, m, r, n_bound = _shared_bounds(targets, group_order)
    if mode == "proven":
        k = max(2, math.ceil(math.log(2 * max(n_bound, 2) ** 4) / math.log(sel.p)))
    elif mode == "heuristic":
        k = max(2, math.ceil(1.5 * math.log(max(n_bound, 2)) / math.log(sel.p)))
    else:
        raise ValueError(f"unknown mode {mode!r}")

    subset = galois_mod.initial_subset(n)
    validated = False
    stuck = 0
    for rnd in range(max_rounds):
        roots = padic.cached_roots(targets.f, sel.p, sel.f_p, k, seed)
        if not validated:
            for g in group.generators:
                if not galois_mod.validate_action(g, roots):
                    raise ValueError(f"permutation {g} fails the root-action check")
            validated = True
        b_rows = []
        for g in targets.targets:
            row = []
            for sig in subset.perms:
                row.extend(_eval_permuted(g, roots, sig).coeffs)
            b_rows.append(tuple(row))
        ns = lattice.nullspace_mod(b_rows, sel.p, k)
        rec = _reconstruct_rows(ns, sel.p, k)
        if rec is not None:
            final = _finalize(rec, Fraction(3, 4))
            ok = all(max(abs(x) for x in row) <= n_bound for row in final)
            if ok and _verify_rows(final, targets, sel.p, group_order, seed):
                cert = "proven" if mode == "proven" else "heuristic-verified"
                bounds = BoundData(m_prime, m, r, n_bound, k, 1, sel.p, sel.f_p)
                return RelationBasis(tuple(final), cert, bounds,
                                     verification_k=None if mode == "proven" else k)
        grown = galois_mod.grow_subset(subset, group, seed=seed + rnd)
        if grown.exhausted and rec is None:
            stuck += 1
            if stuck >= 10:
                raise EscalationExhausted(
                    "the supplied permutation group is exhausted and "
                    "reconstruction keeps failing; a larger group is needed"
                )
        subset = grown
        k = math.ceil(1.2 * k)
    raise EscalationExhausted(
        f"relation search did not converge in {max_rounds} rounds (last k={k})"
    )
