"""Finite-precision arithmetic in the unramified extension of Q_p where a
squarefree integral polynomial splits, plus root lifting.

The ring is (Z/p^k)[t]/(omega) with omega monic of degree f_p, irreducible
mod p.  Elements are coefficient tuples of length f_p with entries in
[0, p^k).  The same integer lift of omega (entries in [0, p)) is reused at
every precision, so roots lifted at different precisions stay compatible.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from . import gf


class PadicError(ValueError):
    pass


class NoAdmissiblePrime(PadicError):
    pass


# ----------------------------------------------------------------- primes

def _primes_from(start: int):
    n = max(start, 2)
    while True:
        if all(n % d for d in range(2, int(math.isqrt(n)) + 1)):
            yield n
        n += 1


def is_admissible(f: Sequence[int], p: int) -> bool:
    """p is admissible for monic integral f when f stays squarefree mod p."""
    fp = gf.gf_normalize(f, p)
    if len(fp) != len(f):  # leading coefficient vanished (non-monic reduction)
        return False
    return gf.gf_is_squarefree(fp, p)


@dataclass(frozen=True)
class PrimeSelection:
    p: int
    f_p: int
    degrees: tuple[int, ...]


def factor_degrees(f: Sequence[int], p: int) -> tuple[int, ...]:
    """Degrees of the irreducible factors of f mod p (sorted multiset)."""
    return gf.distinct_degree_degrees(gf.gf_normalize(f, p), p)


def select_prime(
    f: Sequence[int],
    search_limit: int = 20,
    floor: int | None = None,
    prefer: str = "min",
    avoid: int = 1,
) -> PrimeSelection:
    """Choose a prime among the first `search_limit` admissible ones.

    prefer="min" minimizes the splitting degree f_p (ties: smallest p);
    prefer="max" maximizes it, which feeds the Galois-action route more
    Frobenius columns.  `avoid` excludes divisors of that integer.
    """
    n = len(f) - 1
    if floor is None:
        floor = n + 1
    found: list[PrimeSelection] = []
    count = 0
    for p in _primes_from(max(floor, 2)):
        if count >= search_limit:
            break
        if avoid % p == 0:
            continue
        if not is_admissible(f, p):
            continue
        degs = factor_degrees(f, p)
        found.append(PrimeSelection(p, math.lcm(*degs) if degs else 1, degs))
        count += 1
    if not found:
        raise NoAdmissiblePrime(
            f"no admissible prime for the polynomial within the first "
            f"{search_limit} candidates"
        )
    if prefer == "min":
        return min(found, key=lambda s: (s.f_p, s.p))
    if prefer == "max":
        return min(found, key=lambda s: (-s.f_p, s.p))
    raise ValueError(f"unknown preference {prefer!r}")


# ------------------------------------------------------------------- ring

class UnramifiedRing:
    """(Z/p^k)[t]/(omega): precision-k model of the unramified extension."""

    def __init__(self, p: int, k: int, omega: Sequence[int]):
        if k < 1:
            raise PadicError("precision exponent must be >= 1")
        self.p = p
        self.k = k
        self.modulus = p**k
        self.omega = tuple(int(c) % p for c in omega)
        if self.omega[-1] != 1:
            raise PadicError("defining polynomial must be monic")
        self.degree = len(self.omega) - 1
        if not gf.gf_is_irreducible(self.omega, p):
            raise PadicError("defining polynomial is reducible mod p")
        self._residue_field = gf.GFpm(p, self.omega)

    def __eq__(self, other):
        return (
            isinstance(other, UnramifiedRing)
            and (self.p, self.k, self.omega) == (other.p, other.k, other.omega)
        )

    def __hash__(self):
        return hash((self.p, self.k, self.omega))

    def __repr__(self):
        return f"UnramifiedRing(p={self.p}, k={self.k}, f_p={self.degree})"

    @property
    def residue_field(self) -> gf.GFpm:
        return self._residue_field

    def element(self, coeffs: Sequence[int]) -> "PadicElement":
        c = [int(x) for x in coeffs]
        if len(c) > self.degree:
            c = self._reduce_by_omega(c)
        c = [x % self.modulus for x in c]
        c += [0] * (self.degree - len(c))
        return PadicElement(self, tuple(c))

    def _reduce_by_omega(self, c: list[int]) -> list[int]:
        d = self.degree
        c = list(c)
        for i in range(len(c) - 1, d - 1, -1):
            top = c[i]
            if top:
                c[i] = 0
                for j in range(d):
                    c[i - d + j] = (c[i - d + j] - top * self.omega[j]) % self.modulus
        return c[:d] + [0] * max(0, d - len(c))

    def zero(self) -> "PadicElement":
        return PadicElement(self, (0,) * self.degree)

    def one(self) -> "PadicElement":
        return self.element((1,))

    def from_int(self, a: int) -> "PadicElement":
        return self.element((a,))

    def from_residue(self, a: Sequence[int]) -> "PadicElement":
        """Lift a residue-field element (coordinates as-is)."""
        return self.element(tuple(a))


@dataclass(frozen=True)
class PadicElement:
    ring: UnramifiedRing
    coeffs: tuple[int, ...]

    def __add__(self, other):
        other = self._coerce(other)
        m = self.ring.modulus
        return PadicElement(
            self.ring, tuple((a + b) % m for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other):
        other = self._coerce(other)
        m = self.ring.modulus
        return PadicElement(
            self.ring, tuple((a - b) % m for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self):
        m = self.ring.modulus
        return PadicElement(self.ring, tuple((-a) % m for a in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        raw = [0] * (2 * self.ring.degree - 1) if self.ring.degree > 1 else [0]
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    raw[i + j] += a * b
        return self.ring.element(raw)

    def _coerce(self, other):
        if isinstance(other, PadicElement):
            if other.ring != self.ring:
                raise PadicError("elements from different rings")
            return other
        if isinstance(other, int):
            return self.ring.from_int(other)
        return NotImplemented

    __radd__ = __add__
    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def inverse(self) -> "PadicElement":
        """Inverse of a unit (valuation 0), by residue inverse + Newton."""
        ring = self.ring
        field = ring.residue_field
        red = field.element(tuple(c % ring.p for c in self.coeffs))
        if field.is_zero(red):
            raise ZeroDivisionError("element is not a unit")
        y = ring.from_residue(field.inv(red))
        prec = 1
        while prec < ring.k:
            y = y * (ring.from_int(2) - self * y)
            prec *= 2
        assert (self * y).coeffs == ring.one().coeffs
        return y

    def frobenius_residue(self) -> tuple[int, ...]:
        """Image of the residue of this element under x -> x^p."""
        field = self.ring.residue_field
        return field.pow(field.element(tuple(c % self.ring.p for c in self.coeffs)), self.ring.p)

    def residue(self) -> tuple[int, ...]:
        return tuple(c % self.ring.p for c in self.coeffs)


def valuation(x, p: int | None = None, k: int | None = None) -> int:
    """Largest m <= k with x == 0 mod p^m; the return value k means ">= k".

    Accepts a PadicElement (p, k taken from its ring) or a plain integer
    with explicit p (and optionally a cap k).
    """
    if isinstance(x, PadicElement):
        p, k = x.ring.p, x.ring.k
        coeffs = x.coeffs
    else:
        if p is None:
            raise ValueError("valuation of an integer needs the prime p")
        coeffs = (int(x) % (p**k) if k is not None else int(x),)
    best = None
    for c in coeffs:
        if c == 0:
            continue
        v = 0
        while c % p == 0 and (k is None or v < k):
            c //= p
            v += 1
        if v == 0:
            return 0
        best = v if best is None else min(best, v)
    if best is None:
        # identically zero at the stored precision
        if k is None:
            raise ValueError("valuation of exact zero is unbounded; supply a cap k")
        return k
    return min(best, k) if k is not None else best


# ------------------------------------------------------------------ roots

def build_unramified(p: int, f_p: int, k: int, seed: int = 0) -> UnramifiedRing:
    """Ring of degree f_p and precision k, defining polynomial by seeded search."""
    omega = gf.find_irreducible(p, f_p, seed=seed)
    return UnramifiedRing(p, k, omega)


@dataclass(frozen=True)
class ApproxRoots:
    ring: UnramifiedRing
    roots: tuple[PadicElement, ...]
    poly: tuple[int, ...]

    @property
    def k(self) -> int:
        return self.ring.k

    def dump(self) -> str:
        """Diagnostic JSON: coefficient vectors as decimal strings, p, k, omega."""
        return json.dumps(
            {
                "p": self.ring.p,
                "k": self.ring.k,
                "omega": [str(c) for c in self.ring.omega],
                "roots": [[str(c) for c in r.coeffs] for r in self.roots],
            }
        )


def _eval_int_poly(f: Sequence[int], x: PadicElement) -> PadicElement:
    acc = x.ring.zero()
    for c in reversed(f):
        acc = acc * x + x.ring.from_int(c)
    return acc


def _eval_int_poly_residue(field: gf.GFpm, f: Sequence[int], a) -> tuple[int, ...]:
    acc = field.zero()
    for c in reversed(f):
        acc = field.add(field.mul(acc, a), field.from_int(c))
    return acc


def lift_roots(f: Sequence[int], ring: UnramifiedRing, seed: int = 0) -> ApproxRoots:
    """All roots of f in the ring, Hensel-lifted to precision k.

    Roots are found in the residue field GF(p^f_p) (equal-degree splitting)
    and labeled once, sorted by their residue coordinate vectors; lifting
    preserves that labeling.
    """
    f = tuple(int(c) for c in f)
    p = ring.p
    if f[-1] != 1:
        raise PadicError("polynomial must be monic")
    if not is_admissible(f, p):
        raise PadicError(f"polynomial is not squarefree mod {p}")
    field = ring.residue_field
    fbar = [field.from_int(c) for c in f]
    residues = sorted(field.roots_of_split_poly(fbar, seed=seed))
    if len(residues) != len(f) - 1:
        raise PadicError("ring degree too small: polynomial does not split")
    fprime = tuple(i * f[i] for i in range(1, len(f)))
    roots = []
    for r in residues:
        prec = 1
        cur_ring = UnramifiedRing(p, 1, ring.omega) if ring.k > 1 else ring
        alpha = cur_ring.from_residue(r)
        while prec < ring.k:
            prec = min(2 * prec, ring.k)
            nxt = UnramifiedRing(p, prec, ring.omega) if prec != ring.k else ring
            alpha = nxt.element(alpha.coeffs)
            alpha = alpha - _eval_int_poly(f, alpha) * _eval_int_poly(fprime, alpha).inverse()
        if ring.k == 1:
            alpha = ring.element(alpha.coeffs)
        assert _eval_int_poly(f, alpha).is_zero()
        roots.append(alpha)
    return ApproxRoots(ring, tuple(roots), f)


def increase_precision(roots: ApproxRoots, k_new: int) -> ApproxRoots:
    """Same roots (same labeling) at a higher precision."""
    old = roots.ring
    if k_new == old.k:
        return roots
    if k_new < old.k:
        raise PadicError("cannot decrease precision")
    ring = UnramifiedRing(old.p, k_new, old.omega)
    f = roots.poly
    fprime = tuple(i * f[i] for i in range(1, len(f)))
    lifted = []
    for r in roots.roots:
        prec = old.k
        alpha = r
        while prec < k_new:
            prec = min(2 * prec, k_new)
            nxt = UnramifiedRing(old.p, prec, old.omega) if prec != k_new else ring
            alpha = nxt.element(alpha.coeffs)
            alpha = alpha - _eval_int_poly(f, alpha) * _eval_int_poly(fprime, alpha).inverse()
        lifted.append(alpha)
    return ApproxRoots(ring, tuple(lifted), f)


def eval_target(g, roots: ApproxRoots) -> PadicElement:
    """Evaluate an integer-coefficient sparse polynomial at the roots.

    g must expose .terms as an iterable of (coefficient, exponent-vector).
    """
    ring = roots.ring
    acc = ring.zero()
    n = len(roots.roots)
    for coeff, exps in g.terms:
        if len(exps) != n:
            raise PadicError("exponent vector length does not match root count")
        term = ring.from_int(coeff)
        for alpha, e in zip(roots.roots, exps):
            if e:
                base = alpha
                ee = e
                powed = ring.one()
                while ee:
                    if ee & 1:
                        powed = powed * base
                    base = base * base
                    ee >>= 1
                term = term * powed
        acc = acc + term
    return acc


def frobenius_perm(roots: ApproxRoots) -> tuple[int, ...]:
    """Permutation sigma (0-indexed images) with alpha_i^p = alpha_{sigma(i)} mod p."""
    residues = [r.residue() for r in roots.roots]
    index = {res: i for i, res in enumerate(residues)}
    if len(index) != len(residues):
        raise PadicError("roots are not distinct mod p")
    images = []
    for r in roots.roots:
        target = r.frobenius_residue()
        if target not in index:
            raise PadicError("Frobenius image does not match any root (corrupted roots)")
        images.append(index[target])
    return tuple(images)


# ------------------------------------------------------------ root caching

@lru_cache(maxsize=256)
def _cached_ring(p: int, f_p: int, k: int, seed: int) -> UnramifiedRing:
    return build_unramified(p, f_p, k, seed=seed)


@lru_cache(maxsize=256)
def cached_roots(f: tuple[int, ...], p: int, f_p: int, k: int, seed: int) -> ApproxRoots:
    """Deterministic shared root lifts; labeling is consistent across k."""
    ring = _cached_ring(p, f_p, k, seed)
    return lift_roots(f, ring, seed=seed)
