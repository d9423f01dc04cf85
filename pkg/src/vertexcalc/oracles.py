"""Brute-force cross-checks for the fast combinatorial routines.

These are slow on purpose: they avoid the abacus and the closed-form
decompositions and instead search directly, so that disagreement with the
main code paths points at a genuine bug.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .partitions import (
    Partition,
    add,
    enumerate_partitions,
    is_e_restricted,
    rim_hooks,
    scale,
)


@lru_cache(maxsize=None)
def cores_by_every_order(lam: Partition, e: int) -> frozenset[tuple[Partition, int]]:
    """Every (core, hooks removed) reachable by stripping e-rim hooks in any order."""
    hooks = rim_hooks(lam, e)
    if not hooks:
        return frozenset({(lam, 0)})
    out = set()
    for mu in hooks:
        for core, k in cores_by_every_order(mu, e):
            out.add((core, k + 1))
    return frozenset(out)


def core_by_hook_removal(lam: Sequence[int], e: int) -> tuple[Partition, int]:
    """The unique e-core and weight; raises if different orders disagree."""
    res = cores_by_every_order(Partition(lam), e)
    if len(res) != 1:
        raise AssertionError(f"rim-hook removal is order dependent for {tuple(lam)}: {sorted(res)}")
    return next(iter(res))


def wilcox_by_search(lam: Sequence[int], e: int) -> list[tuple[Partition, Partition]]:
    """All (sigma, nu) with lam = e*sigma + nu, nu e-restricted, found by enumeration."""
    lam = Partition(lam)
    out = []
    for k in range(lam.size // e + 1):
        for sigma in enumerate_partitions(k):
            if len(sigma) > len(lam):
                continue
            rest = [lam.part(i + 1) - e * sigma.part(i + 1) for i in range(len(lam))]
            if any(r < 0 for r in rest) or any(rest[i] < rest[i + 1] for i in range(len(rest) - 1)):
                continue
            nu = Partition(rest)
            if is_e_restricted(nu, e) and add(scale(sigma, e), nu) == lam:
                out.append((sigma, nu))
    return out


def linkage_classes(rows: Iterable[Partition], entries: Mapping[tuple[Partition, Partition], int]) -> list[frozenset[Partition]]:
    """Connected components of the graph joining lam and mu whenever [S_lam : D_mu] != 0.

    Both row and column labels are partitions, so the components are sets of
    partitions; they are the blocks of the algebra.
    """
    parent: dict[Partition, Partition] = {}

    def find(x: Partition) -> Partition:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for lam in rows:
        find(lam)
    for (lam, mu), m in entries.items():
        if m:
            a, b = find(lam), find(mu)
            if a != b:
                parent[a] = b
    groups: dict[Partition, set[Partition]] = {}
    for x in list(parent):
        groups.setdefault(find(x), set()).add(x)
    return sorted((frozenset(g) for g in groups.values()), key=lambda g: max(g), reverse=True)
