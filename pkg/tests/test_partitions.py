from math import factorial

import pytest
from hypothesis import given, strategies as st

from vertexcalc.partitions import (
    Partition,
    add,
    conjugate,
    dominance_leq,
    e_core_quotient,
    enumerate_partitions,
    hook_lengths,
    is_e_restricted,
    is_e_regular,
    rim_hooks,
    scale,
    syt_count,
    wilcox_decompose,
)


# -- independent oracles ------------------------------------------------------

def euler_partition_counts(n_max):
    """p(0..n_max) from the pentagonal number recurrence."""
    p = [1] + [0] * n_max
    for n in range(1, n_max + 1):
        k, total = 1, 0
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p


def count_standard_tableaux(lam):
    """Remove a corner in every possible way (no hook formula)."""
    lam = tuple(lam)
    if sum(lam) == 0:
        return 1
    total = 0
    for i in range(len(lam)):
        nxt = lam[i + 1] if i + 1 < len(lam) else 0
        if lam[i] > nxt:
            smaller = list(lam)
            smaller[i] -= 1
            total += count_standard_tableaux(tuple(x for x in smaller if x))
    return total


def core_by_bead_moves(lam, e):
    """Slide beads down by e on a beta-set until stuck, counting the moves."""
    k = len(lam)
    beads = {lam[i] + k - 1 - i for i in range(k)}
    moves = 0
    changed = True
    while changed:
        changed = False
        for b in sorted(beads):
            if b - e >= 0 and b - e not in beads:
                beads.remove(b)
                beads.add(b - e)
                moves += 1
                changed = True
                break
    ordered = sorted(beads, reverse=True)
    return Partition(x - (k - 1 - i) for i, x in enumerate(ordered)), moves


def all_hook_removals(lam, e, seen=None):
    """Set of end results of stripping e-rim hooks in every order."""
    lam = Partition(lam)
    hooks = rim_hooks(lam, e)
    if not hooks:
        return {lam}
    out = set()
    for mu in hooks:
        out |= all_hook_removals(mu, e)
    return out


partitions_st = st.lists(st.integers(1, 7), max_size=6).map(lambda xs: Partition(sorted(xs, reverse=True)))


# -- basic operations -----------------------------------------------------------

def test_partition_validation_and_text():
    assert Partition([3, 1]).to_text() == "3,1"
    assert Partition.parse("") == Partition()
    assert Partition.parse("4,1") == Partition((4, 1))
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(ValueError):
        Partition([2, -1])
    assert Partition([2, 0]) == Partition((2,))


def test_conjugate_examples():
    assert conjugate(()) == Partition()
    assert conjugate((5,)) == Partition((1,) * 5)
    assert conjugate((4, 1)) == Partition((2, 1, 1, 1))


@given(partitions_st)
def test_conjugate_involution_and_column_heights(lam):
    lamc = conjugate(lam)
    assert conjugate(lamc) == lam
    for j in range(1, (lam[0] if lam else 0) + 1):
        assert lamc[j - 1] == sum(1 for p in lam if p >= j)


def test_restricted_examples():
    assert is_e_restricted((1, 1, 1), 3)
    assert not is_e_restricted((3, 3), 3)
    assert is_e_restricted((), 4)
    with pytest.raises(ValueError):
        is_e_restricted((1,), 1)


@given(partitions_st, st.integers(2, 6))
def test_restricted_iff_conjugate_regular(lam, e):
    mult_ok = all(list(conjugate(lam)).count(p) < e for p in set(conjugate(lam)))
    assert is_e_restricted(lam, e) == mult_ok
    assert is_e_restricted(lam, e) == is_e_regular(conjugate(lam), e)


def test_dominance_examples():
    assert dominance_leq((2, 2), (3, 1))
    assert not dominance_leq((3, 1), (2, 2))
    assert dominance_leq((2, 1, 1), (2, 1, 1))
    with pytest.raises(ValueError):
        dominance_leq((2,), (1,))


@pytest.mark.parametrize("n", range(1, 8))
def test_dominance_reverses_under_conjugation(n):
    parts = enumerate_partitions(n)
    for a in parts:
        for b in parts:
            assert dominance_leq(a, b) == dominance_leq(conjugate(b), conjugate(a))


def test_enumeration_counts_match_pentagonal_recurrence():
    p = euler_partition_counts(14)
    assert [len(enumerate_partitions(n)) for n in range(15)] == p
    assert enumerate_partitions(0) == (Partition(),)
    assert len(enumerate_partitions(4)) == 5
    assert len(enumerate_partitions(10)) == 42


@pytest.mark.parametrize("n", range(1, 9))
def test_enumeration_order_refines_dominance(n):
    parts = enumerate_partitions(n)
    for i, a in enumerate(parts):
        for b in parts[i + 1:]:
            # a comes first, so a must not be strictly dominated by b
            assert not (dominance_leq(a, b) and a != b)


def test_syt_counts():
    assert syt_count((6,)) == 1
    assert syt_count((2, 1)) == 2
    assert syt_count((2, 2)) == 2


@given(partitions_st)
def test_syt_count_matches_corner_recursion(lam):
    if lam.size <= 12:
        assert syt_count(lam) == count_standard_tableaux(lam)
        assert syt_count(lam) == syt_count(conjugate(lam))


@pytest.mark.parametrize("n", range(0, 11))
def test_sum_of_squares_is_factorial(n):
    assert sum(syt_count(l) ** 2 for l in enumerate_partitions(n)) == factorial(n)


# -- cores, weights and quotients -----------------------------------------------

def test_core_examples():
    d = e_core_quotient((4, 1), 2)
    assert (d.core, d.weight) == (Partition((2, 1)), 1)
    # (2,1) has a hook of length 3 at (1,1), so it is not a 3-core
    d = e_core_quotient((2, 1), 3)
    assert (d.core, d.weight) == (Partition(), 1)
    for e in range(2, 7):
        d = e_core_quotient((e,), e)
        assert (d.core, d.weight) == (Partition(), 1)


@pytest.mark.parametrize("e", range(2, 7))
def test_core_agrees_with_bead_moves_and_every_removal_order(e):
    for n in range(0, 11):
        for lam in enumerate_partitions(n):
            d = e_core_quotient(lam, e)
            core, moves = core_by_bead_moves(lam, e)
            assert (d.core, d.weight) == (core, moves)
            assert all_hook_removals(lam, e) == {core}
            assert d.core.size + e * d.weight == n
            assert sum(q.size for q in d.quotient) == d.weight


@given(partitions_st, st.integers(2, 6))
def test_weight_counts_hooks_divisible_by_e(lam, e):
    d = e_core_quotient(lam, e)
    assert d.weight == sum(1 for h in hook_lengths(lam).values() if h % e == 0)
    assert not rim_hooks(d.core, e)


# -- Wilcox decomposition ----------------------------------------------------------

def wilcox_pairs_by_search(lam, e):
    out = []
    for k in range(lam.size // e + 1):
        for sigma in enumerate_partitions(k):
            rest = [lam.part(i) - e * sigma.part(i) for i in range(1, max(len(lam), len(sigma)) + 1)]
            if any(r < 0 for r in rest) or rest != sorted(rest, reverse=True):
                continue
            nu = Partition([r for r in rest if r])
            if is_e_restricted(nu, e):
                out.append((sigma, nu))
    return out


def test_wilcox_examples():
    w = wilcox_decompose((5, 3), 2)
    assert (w.sigma, w.nu) == (Partition((2, 1)), Partition((1, 1)))
    w = wilcox_decompose((6,), 3)
    assert (w.sigma, w.nu) == (Partition((2,)), Partition())
    w = wilcox_decompose((2, 1, 1), 3)
    assert (w.sigma, w.nu) == (Partition(), Partition((2, 1, 1)))


@pytest.mark.parametrize("e", [2, 3, 4])
def test_wilcox_unique_by_search(e):
    for n in range(0, 10):
        for lam in enumerate_partitions(n):
            w = wilcox_decompose(lam, e)
            assert wilcox_pairs_by_search(lam, e) == [(w.sigma, w.nu)]


@given(partitions_st, st.integers(2, 6))
def test_wilcox_recomposes(lam, e):
    w = wilcox_decompose(lam, e)
    assert add(scale(w.sigma, e), w.nu) == lam
    assert is_e_restricted(w.nu, e)
