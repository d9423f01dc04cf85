from collections import Counter
from functools import lru_cache
from itertools import permutations, product
from math import factorial, prod

import numpy as np
import pytest
from hypothesis import given, strategies as st

from vertexcalc.kgroup import (
    DoubleCoset,
    KClass,
    YoungSubgroup,
    basis_classes,
    double_cosets,
    induce_class,
    lr_coefficient,
    mackey_check,
    mackey_matrices,
    pairing,
    restrict_class,
    schur_product,
    verify_corner_coefficient,
    verify_lr_first_row_bound,
    verify_mackey_classes,
)
from vertexcalc.partitions import Partition, compositions, conjugate, enumerate_partitions, syt_count


# -- oracle: Schur polynomials by SSYT enumeration, products by peeling ------------

def ssyt_monomials(lam, k):
    """Monomial expansion of s_lam in k variables by listing semistandard tableaux."""
    cells = [(i, j) for i, r in enumerate(lam) for j in range(r)]
    out = Counter()
    filling = {}

    def go(idx):
        if idx == len(cells):
            exps = [0] * k
            for v in filling.values():
                exps[v] += 1
            out[tuple(exps)] += 1
            return
        i, j = cells[idx]
        lo = 0
        if j > 0:
            lo = max(lo, filling[(i, j - 1)])
        if i > 0:
            lo = max(lo, filling[(i - 1, j)] + 1)
        for v in range(lo, k):
            filling[(i, j)] = v
            go(idx + 1)
        filling.pop((i, j), None)

    go(0)
    return out


@lru_cache(maxsize=None)
def schur_poly(lam, k):
    return dict(ssyt_monomials(lam, k))


def poly_mul(a, b):
    out = Counter()
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    return out


def expand_in_schur(poly, k):
    """Repeatedly peel the lexicographically largest monomial, which is a leading Schur term."""
    poly = Counter({e: c for e, c in poly.items() if c})
    out = {}
    while poly:
        lead = max(poly)
        c = poly[lead]
        lam = Partition(lead)  # leading monomials are partitions
        out[lam] = c
        for e, d in schur_poly(tuple(lam), k).items():
            poly[e] -= c * d
            if not poly[e]:
                del poly[e]
    return out


@lru_cache(maxsize=None)
def lr_by_symmetric_functions(lam, mu):
    k = sum(lam) + sum(mu)
    return expand_in_schur(poly_mul(schur_poly(lam, k), schur_poly(mu, k)), k)


def pairs_up_to(n_max):
    for n in range(n_max + 1):
        for a in range(n + 1):
            for lam in enumerate_partitions(a):
                for mu in enumerate_partitions(n - a):
                    yield lam, mu


# -- LR coefficients ----------------------------------------------------------------------

def test_lr_examples():
    assert lr_coefficient((2, 1), (), (2, 1)) == 1
    assert lr_coefficient((1,), (1, 1), (2, 1)) == 1
    assert lr_coefficient((2, 1), (2,), (4, 1)) == 1
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2
    assert lr_coefficient((1,), (1,), (3,)) == 0  # sizes do not add up


@pytest.mark.parametrize("n_max", [6])
def test_lr_matches_symmetric_function_oracle(n_max):
    for lam, mu in pairs_up_to(n_max):
        expected = lr_by_symmetric_functions(tuple(lam), tuple(mu))
        for nu in enumerate_partitions(lam.size + mu.size):
            assert lr_coefficient(lam, mu, nu) == expected.get(nu, 0), (lam, mu, nu)
        assert schur_product(lam, mu) == {k: v for k, v in expected.items() if v}


def test_lr_symmetries():
    for lam, mu in pairs_up_to(8):
        for nu in enumerate_partitions(lam.size + mu.size):
            c = lr_coefficient(lam, mu, nu)
            assert c == lr_coefficient(mu, lam, nu)
            assert c == lr_coefficient(conjugate(lam), conjugate(mu), conjugate(nu))


def test_lr_facts():
    rep = verify_lr_first_row_bound(6)
    assert rep["violations"] == []
    assert lr_coefficient((), (), ()) == 1
    assert lr_coefficient((1,), (2,), (3,)) == 1
    assert verify_corner_coefficient((), 2, 2)
    assert verify_corner_coefficient((2, 1), 2, 1)
    assert verify_corner_coefficient((1,), 3, 2)
    assert lr_coefficient((1,), (6,), (7,)) == 1
    with pytest.raises(ValueError):
        verify_corner_coefficient((2,), 2, 1)


# -- induction and restriction -------------------------------------------------------------

def test_induce_restrict_examples():
    x = KClass.basis((2, 1), [(2,), (1,)])
    assert induce_class(x) == KClass((3,), {((3,),): 1, ((2, 1),): 1})
    assert induce_class(KClass.basis((1, 1), [(1,), (1,)])) == KClass((2,), {((2,),): 1, ((1, 1),): 1})
    y = KClass.basis((4,), [(3, 1)])
    assert induce_class(y) == y
    assert restrict_class(y, (4,)) == y
    r = restrict_class(KClass.basis((3,), [(2, 1)]), (2, 1))
    assert r == KClass((2, 1), {((2,), (1,)): 1, ((1, 1), (1,)): 1})
    lam = Partition((3, 2))
    assert restrict_class(KClass.basis((5,), [lam]), (1,) * 5) == KClass((1,) * 5, {((1,),) * 5: syt_count(lam)})


def test_kclass_validation_and_json():
    with pytest.raises(ValueError):
        KClass.basis((2, 1), [(1,), (1,)])
    x = KClass((2, 1), {((2,), (1,)): 2, ((1, 1), (1,)): -1})
    assert KClass.from_json(x.to_json()) == x
    assert (x + x.scaled(-1)).terms == {}
    assert YoungSubgroup((3, 1, 2)).parabolic_type().parts == (3, 2)
    assert YoungSubgroup((3, 1, 2)).order == 12


@pytest.mark.parametrize("n", range(1, 7))
def test_frobenius_reciprocity_and_dimensions(n):
    index = {mu: factorial(n) // prod(factorial(p) for p in mu) for mu in compositions(n)}
    full = list(basis_classes((n,)))
    for mu in compositions(n):
        for x in basis_classes(mu):
            ind = induce_class(x)
            assert ind.dimension() == index[mu] * x.dimension()
            for y in full:
                assert pairing(ind, y) == pairing(x, restrict_class(y, mu))


@pytest.mark.parametrize("n", range(1, 7))
def test_transitivity(n):
    ones = (1,) * n
    x = KClass.basis(ones, [(1,)] * n)
    direct = induce_class(x)
    for mu in compositions(n):
        assert induce_class(induce_class(x, mu)) == direct
    for lam in enumerate_partitions(n):
        y = KClass.basis((n,), [lam])
        direct = restrict_class(y, ones)
        for mu in compositions(n):
            assert restrict_class(restrict_class(y, mu), ones) == direct


# -- double cosets ----------------------------------------------------------------------

def young_group(comp):
    """All permutations of range(n) preserving the consecutive blocks of comp."""
    blocks, start = [], 0
    for p in comp:
        blocks.append(list(range(start, start + p)))
        start += p
    out = []
    for pieces in product(*(permutations(b) for b in blocks)):
        g = [0] * start
        for b, img in zip(blocks, pieces):
            for x, y in zip(b, img):
                g[x] = y
        out.append(tuple(g))
    return out


def double_coset_sizes_by_brute_force(nu, mu):
    n = sum(nu)
    A, B = young_group(nu), young_group(mu)
    seen, sizes = set(), []
    for w in permutations(range(n)):
        if w in seen:
            continue
        orbit = {tuple(a[w[b[i]]] for i in range(n)) for a in A for b in B}
        seen |= orbit
        sizes.append(len(orbit))
    return sorted(sizes)


def test_double_coset_examples():
    assert len(double_cosets((4,), (2, 1, 1))) == 1
    assert [d.table for d in double_cosets((2, 1), (2, 1))] == [((2, 0), (0, 1)), ((1, 1), (1, 0))]
    assert len(double_cosets((1, 1), (1, 1))) == 2
    d = DoubleCoset(((1, 1), (1, 0)))
    assert d.row_sums == (2, 1) and d.col_sums == (2, 1)
    assert d.intersection_order() == 1


@pytest.mark.parametrize("n", range(1, 6))
def test_double_cosets_match_group_orbits(n):
    for nu in compositions(n):
        for mu in compositions(n):
            tables = double_cosets(nu, mu)
            order = prod(factorial(p) for p in nu) * prod(factorial(p) for p in mu)
            sizes = sorted(order // d.intersection_order() for d in tables)
            assert sizes == double_coset_sizes_by_brute_force(nu, mu)
            assert sum(sizes) == factorial(n)
            assert len({d.table for d in tables}) == len(tables)
            assert [d.table for d in tables] == sorted((d.table for d in tables), reverse=True)


# -- Mackey ---------------------------------------------------------------------------------

def test_mackey_example():
    x = KClass.basis((2, 1), [(2,), (1,)])
    ok, lhs, rhs = mackey_check((2, 1), (2, 1), x)
    assert ok
    assert lhs == KClass((2, 1), {((2,), (1,)): 2, ((1, 1), (1,)): 1})
    ok, lhs, rhs = mackey_check((3,), (2, 1), x)
    assert ok and lhs == induce_class(x)


@pytest.mark.parametrize("n", range(1, 6))
def test_mackey_per_class_route_agrees_with_matrix_route(n):
    for nu in compositions(n):
        for mu in compositions(n):
            lhs_m, rhs_m = mackey_matrices(nu, mu)
            assert np.array_equal(lhs_m, rhs_m)
            for j, x in enumerate(basis_classes(mu)):
                ok, lhs, rhs = mackey_check(nu, mu, x)
                assert ok
                col = {k: c for k, c in zip(_basis(nu), lhs_m[:, j]) if c}
                assert lhs.terms == col


def _basis(comp):
    from vertexcalc.kgroup import class_basis
    return class_basis(tuple(comp))


@pytest.mark.parametrize("n", range(1, 7))
def test_mackey_all_classes(n):
    rep = verify_mackey_classes(n)
    assert rep["failures"] == []
    assert rep["pairs"] == 2 ** (2 * (n - 1))


@given(st.lists(st.integers(1, 3), min_size=1, max_size=3), st.data())
def test_mackey_random_classes(mu, data):
    n = sum(mu)
    nu = data.draw(st.sampled_from(list(compositions(n))))
    coeffs = {}
    for labels in _basis(mu):
        c = data.draw(st.integers(-2, 2))
        if c:
            coeffs[labels] = c
    ok, _, _ = mackey_check(nu, mu, KClass(mu, coeffs))
    assert ok
