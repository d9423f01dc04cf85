"""Permutations of S_n with multiplication tables by simple reflections.

A permutation w is stored in one-line notation as a tuple of 0-based
values, w = (w(0), ..., w(n-1)).  The simple reflection s_i (1 <= i < n)
swaps i-1 and i.  Composition is as functions: (u v)(k) = u(v(k)), so
w s_i swaps the entries in positions i-1, i and s_i w swaps the values
i-1, i.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Sequence

Perm = tuple[int, ...]


def length(w: Sequence[int]) -> int:
    """Number of inversions."""
    return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])


def compose(u: Sequence[int], v: Sequence[int]) -> Perm:
    return tuple(u[v[k]] for k in range(len(v)))


def inverse(w: Sequence[int]) -> Perm:
    out = [0] * len(w)
    for k, x in enumerate(w):
        out[x] = k
    return tuple(out)


def simple_reflection(n: int, i: int) -> Perm:
    w = list(range(n))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def composition_generators(composition: Sequence[int]) -> tuple[int, ...]:
    """Indices i of the simple reflections s_i lying in the Young subgroup S_composition."""
    gens, start = [], 0
    for p in composition:
        gens.extend(range(start + 1, start + p))
        start += p
    return tuple(gens)


def composition_blocks(composition: Sequence[int]) -> list[range]:
    blocks, start = [], 0
    for p in composition:
        blocks.append(range(start, start + p))
        start += p
    return blocks


def in_young_subgroup(w: Sequence[int], composition: Sequence[int]) -> bool:
    return all(w[k] in blk for blk in composition_blocks(composition) for k in blk)


def is_distinguished(d: Sequence[int], composition: Sequence[int]) -> bool:
    """Whether d has minimal length in its left coset d S_composition."""
    return all(d[k - 1] < d[k] for k in composition_generators(composition))


def coset_factor(w: Sequence[int], composition: Sequence[int]) -> tuple[Perm, Perm]:
    """Write w = d u with d distinguished for S_composition and u in S_composition.

    d sorts the values of w increasingly on each block; lengths add.
    """
    d = list(w)
    for blk in composition_blocks(composition):
        vals = sorted(w[k] for k in blk)
        for k, x in zip(blk, vals):
            d[k] = x
    d = tuple(d)
    return d, compose(inverse(d), w)


@dataclass(frozen=True)
class PermTable:
    """All of S_n, ordered by (length, one-line notation), with reflection tables."""

    n: int
    perms: tuple[Perm, ...]
    index: dict
    lengths: tuple[int, ...]
    right: tuple[tuple[int, ...], ...]   # right[i][k] = index of perms[k] * s_i
    left: tuple[tuple[int, ...], ...]    # left[i][k] = index of s_i * perms[k]
    inv: tuple[int, ...]
    words: tuple[tuple[int, ...], ...]   # reduced word (i_1, ..., i_l) with w = s_i1 ... s_il
    parent: tuple[tuple[int, int], ...]  # (i, k) with w = s_i * perms[k] and l(w) = l(perms[k]) + 1

    @property
    def size(self) -> int:
        return len(self.perms)

    @property
    def identity(self) -> int:
        return 0


@lru_cache(maxsize=None)
def perm_table(n: int) -> PermTable:
    if n < 0:
        raise ValueError("n must be non-negative")
    perms = sorted(permutations(range(n)), key=lambda w: (length(w), w))
    perms = tuple(tuple(w) for w in perms)
    index = {w: k for k, w in enumerate(perms)}
    lengths = tuple(length(w) for w in perms)
    right = [tuple(0 for _ in perms)]  # dummy for i = 0
    left = [tuple(0 for _ in perms)]
    for i in range(1, n):
        right.append(tuple(index[compose(w, simple_reflection(n, i))] for w in perms))
        left.append(tuple(index[compose(simple_reflection(n, i), w)] for w in perms))
    inv = tuple(index[inverse(w)] for w in perms)
    words: list[tuple[int, ...]] = [()] * len(perms)
    parent: list[tuple[int, int]] = [(0, 0)] * len(perms)
    for k, w in enumerate(perms):
        if k == 0:
            continue
        # first descent on the left: some s_i with l(s_i w) < l(w)
        for i in range(1, n):
            j = left[i][k]
            if lengths[j] < lengths[k]:
                words[k] = (i,) + words[j]
                parent[k] = (i, j)
                break
    return PermTable(n, perms, index, lengths, tuple(right), tuple(left), inv, tuple(words), tuple(parent))


@lru_cache(maxsize=None)
def distinguished_reps(composition: tuple[int, ...], within: tuple[int, ...] | None = None) -> tuple[int, ...]:
    """Indices of the distinguished left coset representatives of S_composition.

    With ``within`` given (a coarsening of ``composition``) only the
    representatives lying in S_within are returned.
    """
    n = sum(composition)
    table = perm_table(n)
    out = []
    for k, w in enumerate(table.perms):
        if within is not None and not in_young_subgroup(w, within):
            continue
        if is_distinguished(w, composition):
            out.append(k)
    return tuple(out)


@lru_cache(maxsize=None)
def young_subgroup_elements(composition: tuple[int, ...]) -> tuple[int, ...]:
    table = perm_table(sum(composition))
    return tuple(k for k, w in enumerate(table.perms) if in_young_subgroup(w, composition))
