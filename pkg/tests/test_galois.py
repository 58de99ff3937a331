"""Permutation groups acting on labeled p-adic roots, the action
validator, the group constructors, and the trace-criterion fast path.
"""

import pytest

from alghull import galois, matrices, padic

F_QUAD = (-2, 0, 1)
F_QUARTIC_RAD = (-2, 0, 0, 0, 1)  # x^4 - 2
F_QUARTIC_CYC = (1, 0, 0, 0, 1)  # x^8/... roots are primitive 8th roots
F_CUBIC = (-2, 0, 0, 1)  # x^3 - 2


def test_perm_utilities():
    a, b = (1, 2, 0), (0, 2, 1)
    assert galois.compose(a, b) == (1, 0, 2)
    assert galois.perm_inverse(a) == (2, 0, 1)
    assert galois.compose(a, galois.perm_inverse(a)) == (0, 1, 2)


def test_perm_group_order_and_membership():
    g = galois.PermGroup(3, [(1, 2, 0)])
    assert g.order == 3
    assert (2, 0, 1) in g
    assert (1, 0, 2) not in g
    assert galois.PermGroup.trivial(4).order == 1
    with pytest.raises(ValueError):
        galois.PermGroup(3, [(0, 0, 1)])


def test_frobenius_group():
    roots = padic.cached_roots(F_QUAD, 3, 2, 8, 0)
    g = galois.PermGroup.frobenius(roots)
    assert g.order == 2
    assert g.generators[0] == (1, 0)


def test_subset_growth():
    g = galois.PermGroup(4, [(1, 0, 2, 3), (0, 1, 3, 2)])
    s = galois.initial_subset(4)
    assert len(s.perms) == 1
    sizes = []
    for _ in range(6):
        s = galois.grow_subset(s, g)
        sizes.append(len(s.perms))
    # growth is by ceil(0.2 * #S) = 1 while the group still has elements
    assert sizes == [2, 3, 4, 4, 4, 4]
    assert s.exhausted


def test_subset_growth_exhausts_trivial_group():
    s = galois.grow_subset(galois.initial_subset(3), galois.PermGroup.trivial(3))
    assert s.exhausted and len(s.perms) == 1


def test_validate_action():
    # mixed factor degrees: x^3 - 2 mod 5 = (x - 3)(deg-2 factor)
    assert padic.factor_degrees(F_CUBIC, 5) == (1, 2)
    roots = padic.cached_roots(F_CUBIC, 5, 2, 8, 0)
    frob = padic.frobenius_perm(roots)
    assert galois.validate_action(frob, roots)
    # a permutation moving the rational root into a 2-orbit must fail
    lengths = {}
    for i in range(3):
        j, l = i, 0
        while True:
            j = frob[j]
            l += 1
            if j == i:
                break
        lengths[i] = l
    fixed = next(i for i, l in lengths.items() if l == 1)
    moved = next(i for i, l in lengths.items() if l == 2)
    bad = list(range(3))
    bad[fixed], bad[moved] = moved, fixed
    assert not galois.validate_action(tuple(bad), roots)


def test_negation_and_pairing_group():
    roots = padic.cached_roots(F_QUARTIC_RAD, 5, 4, 8, 0)
    neg = galois.negation_perm(roots)
    assert neg is not None
    assert all(neg[neg[i]] == i and neg[i] != i for i in range(4))
    g = galois.pairing_group(roots)
    # two sign flips and one pair swap generate a group of order 8
    assert g.order == 8
    # no pairing for a polynomial whose roots are not closed under negation
    golden = padic.cached_roots((-1, -1, 1), 3, 2, 8, 0)
    assert galois.negation_perm(golden) is None
    assert galois.pairing_group(golden) is None


def test_radical_group():
    roots = padic.cached_roots(F_QUARTIC_RAD, 5, 4, 8, 0)
    g = galois.radical_group(roots)
    assert g is not None
    assert g.order == 8  # rotation of order 4 plus the inversion
    for gen in g.generators:
        assert galois.validate_action(gen, roots)
    sel = padic.select_prime((-2, 0, 0, 0, 0, 1), prefer="max")
    quintic = padic.cached_roots((-2, 0, 0, 0, 0, 1), sel.p, sel.f_p, 30, 0)
    g5 = galois.radical_group(quintic)
    assert g5 is not None
    assert g5.order == 20  # full metacyclic group for x^5 - 2


def test_power_group():
    roots = padic.cached_roots(F_QUARTIC_CYC, 3, 2, 8, 0)  # primitive 8th roots
    g = galois.power_group(roots, (3, 5, 7))
    assert g is not None
    assert g.order == 4  # (Z/8)^x
    assert galois.power_group(roots, (2,)) is None  # squaring kills 8th roots
    # x -> x^3 maps each root to another root of x^4 + 1
    p3 = galois.power_perm(roots, 3)
    assert sorted(p3) == [0, 1, 2, 3]


def test_trace_zero_subspace():
    basis = matrices.power_basis(matrices.companion(F_QUARTIC_RAD))
    traces = [matrices.trace(m) for m in basis.basis]
    assert traces == [4, 0, 0, 0]
    tz = galois.trace_zero_subspace(basis)
    assert tz.dim == 3
    assert all(matrices.trace(m) == 0 for m in tz.basis)


def test_fast_path_hull():
    # prime degree, irreducible, trace zero: the trace-zero power span
    x = matrices.companion((-1, -1, 0, 0, 0, 1))  # x^5 - x - 1
    span = galois.fast_path_hull(x)
    assert span is not None and span.dim == 4
    assert all(matrices.trace(m) == 0 for m in span.basis)
    # prime degree, nonzero trace: the full power span
    x = matrices.companion((-1, -1, 1))
    span = galois.fast_path_hull(x)
    assert span is not None and span.dim == 2
    # reducible characteristic polynomial: fast path does not apply
    assert galois.fast_path_hull(matrices.identity(2)) is None
    # non-prime degree needs the 2-transitivity assertion
    x4 = matrices.companion((2, 1, 0, 0, 1))  # x^4 + x + 2, irreducible
    assert galois.fast_path_hull(x4) is None
    marked = galois.fast_path_hull(x4, galois.PermModuleMarkers(two_transitive=True))
    # trace is zero (no cubic term), so the asserted fast path gives the
    # trace-zero part of the four-dimensional power span
    assert marked is not None and marked.dim == 3
