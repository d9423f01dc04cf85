"""Blocks, cuspidal supports and the predicted vertices of Hecke blocks.

This module is the combinatorial side of every check: it says which
partitions share a block, which parabolic S_e x ... x S_e carries the
cuspidal support of each label, and which parabolic types the block theory
predicts as vertices.  Parabolic subgroups are handled up to conjugacy as
sorted multisets of factor sizes with the trivial S_1 factors dropped.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .partitions import (
    Partition,
    add,
    e_core_quotient,
    enumerate_partitions,
    is_e_core,
    is_e_restricted,
    scale,
    wilcox_decompose,
)


@dataclass(frozen=True)
class BlockId:
    core: Partition
    weight: int
    n: int
    e: int
    r: int = field(default=1, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "core", Partition(self.core))
        if self.e < 2:
            raise ValueError("e must be at least 2")
        if self.weight < 0:
            raise ValueError("weight must be non-negative")
        if not is_e_core(self.core, self.e):
            raise ValueError(f"{self.core} is not an {self.e}-core")
        if self.n != self.core.size + self.e * self.weight:
            raise ValueError("n must equal |core| + e * weight")

    def __str__(self) -> str:
        return f"B[{self.core}, w={self.weight}]"


@dataclass(frozen=True, order=True)
class ParabolicType:
    """A Young subgroup up to conjugacy: factor sizes >= 2, sorted descending."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(sorted((int(p) for p in self.parts if p != 1), reverse=True))
        if any(p < 1 for p in parts):
            raise ValueError(f"factor sizes must be positive: {self.parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of_composition(cls, composition: Iterable[int]) -> "ParabolicType":
        return cls(tuple(composition))

    @property
    def rank(self) -> int:
        return sum(p - 1 for p in self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def composition(self, n: int) -> tuple[int, ...]:
        """A standard representative: the factors in order, then S_1 factors."""
        if self.size > n:
            raise ValueError(f"{self} does not fit in S_{n}")
        return self.parts + (1,) * (n - self.size)

    def to_json(self) -> list[int]:
        return list(self.parts)

    def __str__(self) -> str:
        if not self.parts:
            return "1"
        return " x ".join(f"S_{p}" for p in self.parts)


@dataclass(frozen=True)
class CuspidalSupport:
    k: int
    depth: int
    n: int
    e: int

    def __post_init__(self):
        if self.e * self.k > self.n:
            raise ValueError("e * k exceeds n")
        if self.depth != (self.n - 1) - self.k * (self.e - 1):
            raise ValueError("depth must equal (n - 1) - k (e - 1)")

    @property
    def parabolic(self) -> ParabolicType:
        return ParabolicType((self.e,) * self.k)


def block_of(lam: Sequence[int], e: int, r: int = 1) -> BlockId:
    data = e_core_quotient(lam, e)
    return BlockId(data.core, data.weight, sum(lam), e, r)


def enumerate_block(b: BlockId) -> list[Partition]:
    """All partitions in the block, in the fixed total order of partitions of n."""
    return [lam for lam in enumerate_partitions(b.n) if e_core_quotient(lam, b.e).core == b.core]


def blocks_of_size(n: int, e: int) -> list[BlockId]:
    """Every block of partitions of n, ordered by first appearance."""
    seen: dict[BlockId, None] = {}
    for lam in enumerate_partitions(n):
        seen.setdefault(block_of(lam, e), None)
    return list(seen)


def cuspidal_support(lam: Sequence[int], e: int) -> CuspidalSupport:
    n = sum(lam)
    k = wilcox_decompose(lam, e).sigma.size
    return CuspidalSupport(k, (n - 1) - k * (e - 1), n, e)


def minimal_depth_labels(b: BlockId) -> list[Partition]:
    """The labels e*sigma + core for sigma a partition of the weight."""
    out = []
    for sigma in enumerate_partitions(b.weight):
        lam = add(scale(sigma, b.e), b.core)
        if block_of(lam, b.e) != b:
            raise AssertionError(f"{lam} left the block {b}")
        out.append(lam)
    return out


def predicted_vertex_of_block(b: BlockId) -> ParabolicType:
    return ParabolicType((b.e,) * b.weight)


def predicted_vertex_set(n: int, e: int) -> list[ParabolicType]:
    if e < 2:
        raise ValueError("e must be at least 2")
    return [ParabolicType((e,) * k) for k in range(n // e + 1)]


def kz_shadow(lam: Sequence[int], e: int) -> Optional[Partition]:
    """The simple label lam survives exactly when it is e-restricted."""
    return Partition(lam) if is_e_restricted(lam, e) else None


def parabolic_contains(outer: ParabolicType, inner: ParabolicType, n: int) -> bool:
    """Whether some conjugate of a Young subgroup of type ``inner`` lies in one of type ``outer``.

    The factors of ``inner`` must be grouped so that each group fits inside a
    distinct factor of ``outer``; S_a x S_b embeds in S_m iff a + b <= m.
    """
    if outer.size > n or inner.size > n:
        raise ValueError(f"parabolic type exceeds S_{n}")
    bins = list(outer.parts)
    items = sorted(inner.parts, reverse=True)

    def place(k: int) -> bool:
        if k == len(items):
            return True
        tried = set()
        for b in range(len(bins)):
            if bins[b] >= items[k] and bins[b] not in tried:
                tried.add(bins[b])
                bins[b] -= items[k]
                ok = place(k + 1)
                bins[b] += items[k]
                if ok:
                    return True
        return False

    return place(0)


def parabolic_types(n: int) -> list[ParabolicType]:
    """All Young subgroup types of S_n, largest first (whole group first, trivial last)."""
    return [ParabolicType(tuple(lam)) for lam in enumerate_partitions(n)]


def block_table(n: int, e: int) -> dict:
    blocks = []
    for b in blocks_of_size(n, e):
        labels = enumerate_block(b)
        blocks.append({
            "core": list(b.core),
            "weight": b.weight,
            "labels": [list(lam) for lam in labels],
            "restricted_labels": [list(lam) for lam in labels if is_e_restricted(lam, e)],
            "minimal_depth_labels": [list(lam) for lam in minimal_depth_labels(b)],
            "predicted_vertex": predicted_vertex_of_block(b).to_json(),
        })
    return {"n": n, "e": e, "blocks": blocks}


def cuspidal_table(n: int, e: int) -> dict:
    rows = []
    for lam in enumerate_partitions(n):
        cs = cuspidal_support(lam, e)
        w = wilcox_decompose(lam, e)
        rows.append({
            "label": list(lam),
            "sigma": list(w.sigma),
            "nu": list(w.nu),
            "k": cs.k,
            "depth": cs.depth,
            "parabolic": cs.parabolic.to_json(),
        })
    return {"n": n, "e": e, "labels": rows}


def vertex_table(n: int, e: int) -> dict:
    return {"n": n, "e": e, "predicted_vertices": [t.to_json() for t in predicted_vertex_set(n, e)]}


def block_table_csv(n: int, e: int) -> str:
    """One row per partition of n with its block and cuspidal data."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["label", "core", "weight", "restricted", "k", "depth", "predicted_vertex"])
    for lam in enumerate_partitions(n):
        b = block_of(lam, e)
        cs = cuspidal_support(lam, e)
        writer.writerow([
            lam.to_text(),
            b.core.to_text(),
            b.weight,
            int(is_e_restricted(lam, e)),
            cs.k,
            cs.depth,
            ",".join(str(p) for p in predicted_vertex_of_block(b).parts),
        ])
    return buf.getvalue()


def dumps(obj) -> str:
    """Deterministic JSON used by every table and report."""
    return json.dumps(obj, sort_keys=True, indent=2)
