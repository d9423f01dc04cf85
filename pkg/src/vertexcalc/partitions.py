"""Partition combinatorics: conjugation, dominance, residues, abacus data.

Partitions are stored as weakly decreasing tuples of positive integers
without trailing zeros.  Cells use 1-based English (row, column)
coordinates and the residue of cell (i, j) is (j - i) mod e.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator, Sequence


class Partition(tuple):
    """An integer partition, validated on construction."""

    def __new__(cls, parts: Iterable[int] = ()):
        if type(parts) is cls:
            return parts
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"4,1"``; the empty string is the empty partition."""
        text = text.strip()
        if not text:
            return cls()
        return cls(int(t) for t in text.split(","))

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """1-based part lookup, 0 beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self, start=1):
            for j in range(1, row + 1):
                yield (i, j)

    def to_text(self) -> str:
        return ",".join(str(p) for p in self)

    def __repr__(self) -> str:
        return f"Partition({self.to_text() or '∅'})"

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self) + ")" if self else "∅"


@dataclass(frozen=True)
class ECoreData:
    core: Partition
    weight: int
    quotient: tuple[Partition, ...]


@dataclass(frozen=True)
class WilcoxDecomposition:
    sigma: Partition
    nu: Partition


def _check_e(e: int) -> None:
    if e < 2:
        raise ValueError(f"e must be at least 2, got {e}")


def residue(cell: tuple[int, int], e: int) -> int:
    i, j = cell
    return (j - i) % e


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def is_e_restricted(lam: Sequence[int], e: int) -> bool:
    """True iff every difference lam_i - lam_{i+1} (last part included) is < e."""
    _check_e(e)
    padded = list(lam) + [0]
    return all(padded[i] - padded[i + 1] < e for i in range(len(lam)))


def is_e_regular(lam: Sequence[int], e: int) -> bool:
    """True iff no part is repeated e or more times."""
    _check_e(e)
    return is_e_restricted(conjugate(lam), e)


def dominance_leq(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """mu ⊴ lam in the dominance order; both must have the same size."""
    if sum(mu) != sum(lam):
        raise ValueError(f"dominance needs equal sizes: {tuple(mu)} vs {tuple(lam)}")
    a = b = 0
    for k in range(max(len(mu), len(lam))):
        a += mu[k] if k < len(mu) else 0
        b += lam[k] if k < len(lam) else 0
        if a > b:
            return False
    return True


def hook_lengths(lam: Sequence[int]) -> dict[tuple[int, int], int]:
    conj = conjugate(lam)
    return {
        (i, j): (lam[i - 1] - j) + (conj[j - 1] - i) + 1
        for i in range(1, len(lam) + 1)
        for j in range(1, lam[i - 1] + 1)
    }


def syt_count(lam: Sequence[int]) -> int:
    """Number of standard tableaux of shape lam (hook length formula)."""
    n = sum(lam)
    return factorial(n) // prod(hook_lengths(lam).values())


def addable_cells(lam: Sequence[int]) -> list[tuple[int, int]]:
    """Addable cells, listed from the top row down."""
    out = []
    for i in range(1, len(lam) + 2):
        above = lam[i - 2] if i >= 2 else None
        cur = lam[i - 1] if i <= len(lam) else 0
        if above is None or above > cur:
            out.append((i, cur + 1))
    return out


def removable_cells(lam: Sequence[int]) -> list[tuple[int, int]]:
    """Removable cells, listed from the top row down."""
    out = []
    for i in range(1, len(lam) + 1):
        below = lam[i] if i < len(lam) else 0
        if lam[i - 1] > below:
            out.append((i, lam[i - 1]))
    return out


def add_cell(lam: Sequence[int], cell: tuple[int, int]) -> Partition:
    i, j = cell
    parts = list(lam) + [0]
    if parts[i - 1] != j - 1:
        raise ValueError(f"cell {cell} is not addable to {tuple(lam)}")
    parts[i - 1] += 1
    return Partition(parts)


def rim_hooks(lam: Sequence[int], length: int) -> list[Partition]:
    """All partitions obtained from lam by removing one rim hook of the given length.

    One rim hook per cell of that hook length: the rim cells weakly south-east
    of the cell.
    """
    lam = Partition(lam)
    conj = conjugate(lam)
    out = []
    for (i, j), h in hook_lengths(lam).items():
        if h != length:
            continue
        # walk the rim from the end of row i down to the foot of column j
        parts = list(lam)
        for r in range(i, conj[j - 1] + 1):
            nxt = lam[r] if r < len(lam) else 0
            parts[r - 1] = max(nxt, j) - 1 if r < conj[j - 1] else j - 1
        out.append(Partition(parts))
    return out


def beta_set(lam: Sequence[int], beads: int) -> tuple[int, ...]:
    """Strictly decreasing bead positions beta_i = lam_i + beads - i."""
    if beads < len(lam):
        raise ValueError("bead count below partition length")
    return tuple((lam[i] if i < len(lam) else 0) + beads - 1 - i for i in range(beads))


def from_beta_set(beta: Sequence[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    k = len(beta)
    return Partition(beta[i] - (k - 1 - i) for i in range(k))


def _bead_count(lam: Sequence[int], e: int) -> int:
    k = max(len(lam), e)
    return -(-k // e) * e


def e_core_quotient(lam: Sequence[int], e: int) -> ECoreData:
    """e-core, e-weight and e-quotient read off the abacus.

    The bead count is max(len(lam), e) rounded up to a multiple of e, so the
    runner labelling of the quotient is the first-column-reading convention
    for that bead count.
    """
    _check_e(e)
    k = _bead_count(lam, e)
    beta = beta_set(lam, k)
    runners: list[list[int]] = [[] for _ in range(e)]
    for b in beta:
        runners[b % e].append(b // e)
    core_beads = []
    weight = 0
    quotient = []
    for r, levels in enumerate(runners):
        levels.sort(reverse=True)
        m = len(levels)
        weight += sum(levels) - m * (m - 1) // 2
        core_beads.extend(r + e * t for t in range(m))
        quotient.append(from_beta_set(levels) if levels else Partition())
    return ECoreData(from_beta_set(core_beads), weight, tuple(quotient))


def e_core(lam: Sequence[int], e: int) -> Partition:
    return e_core_quotient(lam, e).core


def e_weight(lam: Sequence[int], e: int) -> int:
    return e_core_quotient(lam, e).weight


def is_e_core(lam: Sequence[int], e: int) -> bool:
    return e_core_quotient(lam, e).weight == 0


def wilcox_decompose(lam: Sequence[int], e: int) -> WilcoxDecomposition:
    """Write lam = e*sigma + nu with nu e-restricted."""
    _check_e(e)
    padded = list(lam) + [0]
    diffs = [padded[i] - padded[i + 1] for i in range(len(lam))]
    nu = [sum(d % e for d in diffs[i:]) for i in range(len(diffs))]
    sigma = [sum(d // e for d in diffs[i:]) for i in range(len(diffs))]
    return WilcoxDecomposition(Partition(sigma), Partition(nu))


def scale(lam: Sequence[int], k: int) -> Partition:
    return Partition(k * p for p in lam)


def add(mu: Sequence[int], nu: Sequence[int]) -> Partition:
    """Componentwise sum, zero-padding the shorter partition."""
    m = max(len(mu), len(nu))
    return Partition(
        (mu[i] if i < len(mu) else 0) + (nu[i] if i < len(nu) else 0) for i in range(m)
    )


def _partitions_desc(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_desc(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n, lexicographically decreasing.

    Decreasing lex order is a linear extension of dominance: if mu ◁ lam then
    lam is listed before mu.  This is checked pairwise on first use.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    parts = tuple(Partition(p) for p in _partitions_desc(n, n))
    for a in range(len(parts)):
        for b in range(a + 1, len(parts)):
            if dominance_leq(parts[a], parts[b]):
                raise AssertionError(f"total order fails to refine dominance at {parts[a]}, {parts[b]}")
    return parts


def partition_index(n: int) -> dict[Partition, int]:
    return {p: i for i, p in enumerate(enumerate_partitions(n))}


def restricted_partitions(n: int, e: int) -> tuple[Partition, ...]:
    return tuple(p for p in enumerate_partitions(n) if is_e_restricted(p, e))


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """All compositions of n (ordered tuples of positive integers)."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest
