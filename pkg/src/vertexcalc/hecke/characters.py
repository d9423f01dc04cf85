"""Characters, simple modules, decomposition numbers and projective covers.

Everything here works with full character vectors w -> Tr(T_w), which
determine classes in the Grothendieck group because the characters of the
simple modules are linearly independent in characteristic zero.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from ..cyclotomic import Cyclotomic
from ..linalg import KMatrix, block_diag, hstack, vectorize
from ..partitions import Partition, enumerate_partitions, is_e_restricted
from .algebra import HeckeAlgebra, HElement
from .modules import (
    ConventionError,
    HModule,
    SpechtModule,
    algebra_radical,
    contravariant_radical,
    regular_module,
    spin,
    submodule,
)


def full_character(M: HModule) -> list[Cyclotomic]:
    """Tr(T_w) for every w of S_n in permutation-table order."""
    if not M.is_full:
        raise ValueError("full characters need an H(S_n)-module")
    ch = M.character()
    return [ch[w] for w in range(M.algebra.dim)]


def _character_column(chi: Sequence[Cyclotomic], fld) -> KMatrix:
    return KMatrix.from_entries(fld, len(chi), 1, {(k, 0): c for k, c in enumerate(chi)})


@lru_cache(maxsize=None)
def algebra(n: int, e: int) -> HeckeAlgebra:
    """A shared algebra instance per (n, e); objects are immutable after construction."""
    return HeckeAlgebra(n, e)


@lru_cache(maxsize=None)
def specht_modules(n: int, e: int) -> dict[Partition, SpechtModule]:
    H = algebra(n, e)
    return {lam: SpechtModule(H, lam) for lam in enumerate_partitions(n)}


@lru_cache(maxsize=None)
def simple_modules(n: int, e: int) -> dict[Partition, HModule]:
    """D_mu for every e-restricted mu, as the head of the Specht module.

    Raises if presence of D_lam disagrees with e-restrictedness of lam.
    """
    out = {}
    for lam, S in specht_modules(n, e).items():
        rank, D = contravariant_radical(S)
        if (D is not None) != is_e_restricted(lam, e):
            raise ConventionError(f"contravariant form rank {rank} for {lam} disagrees with e-restrictedness")
        if D is not None:
            out[lam] = D
    return out


class CharacterDecomposer:
    """Writes characters in terms of the simple characters."""

    def __init__(self, n: int, e: int):
        self.n, self.e = n, e
        self.simples = simple_modules(n, e)
        self.labels = sorted(self.simples, reverse=True)
        H = algebra(n, e)
        self.field = H.field
        cols = [_character_column(full_character(self.simples[mu]), self.field) for mu in self.labels]
        self.matrix = hstack(cols)
        self.rank = self.matrix.rank()

    @property
    def independent(self) -> bool:
        return self.rank == len(self.labels)

    def decompose(self, chi: Sequence[Cyclotomic]) -> dict[Partition, int]:
        """Composition multiplicities [M : D_mu] from the character of M."""
        if not self.independent:
            raise ConventionError("simple characters are linearly dependent")
        x = self.matrix.solve(_character_column(chi, self.field))
        if x is None:
            raise ConventionError("character is not in the span of the simple characters")
        out = {}
        for k, mu in enumerate(self.labels):
            c = x.entry(k, 0)
            if not c.is_rational():
                raise ConventionError(f"non-rational multiplicity {c}")
            r = c.coeffs()[0]
            if r.q != 1 or r < 0:
                raise ConventionError(f"multiplicity {r} is not a non-negative integer")
            out[mu] = int(r)
        return out

    def multiplicities(self, M: HModule) -> dict[Partition, int]:
        return self.decompose(full_character(M))


@lru_cache(maxsize=None)
def decomposer(n: int, e: int) -> CharacterDecomposer:
    return CharacterDecomposer(n, e)


def decomposition_numbers(n: int, e: int) -> dict[tuple[Partition, Partition], int]:
    """[S_lam : D_mu] for all lam and e-restricted mu, from characters."""
    dec = decomposer(n, e)
    out = {}
    for lam, S in specht_modules(n, e).items():
        for mu, m in dec.multiplicities(S).items():
            out[(lam, mu)] = m
    return out


def wedderburn_check(n: int, e: int) -> dict:
    """Sum of (dim D)^2 against dim H - dim rad H."""
    H = algebra(n, e)
    rad = len(algebra_radical(H))
    total = sum(D.dim ** 2 for D in simple_modules(n, e).values())
    return {"n": n, "e": e, "dim_H": H.dim, "dim_rad": rad, "sum_squares": total,
            "ok": total == H.dim - rad}


# -- projective covers ------------------------------------------------------

def primitive_idempotent(n: int, e: int, mu: Sequence[int]) -> HElement:
    """An idempotent f of H with H f the projective cover of D_mu.

    A preimage of a rank-one idempotent of End(D_mu) (and 0 on the other
    simples) is idempotent modulo rad(H); the iteration f -> 3f^2 - 2f^3
    lifts it to a true idempotent because rad(H) is nilpotent.
    """
    mu = Partition(mu)
    H = algebra(n, e)
    simples = simple_modules(n, e)
    if mu not in simples:
        raise ValueError(f"{mu} is not {e}-restricted")
    labels = sorted(simples, reverse=True)
    fld = H.field
    R = regular_module(H)
    # column w: the block-diagonal image of T_w, vectorized
    cols = []
    for w in range(H.dim):
        cols.append(vectorize(block_diag([simples[nu].matrix_of(w) for nu in labels])))
    A = hstack(cols)
    target = block_diag([
        KMatrix.from_entries(fld, simples[nu].dim, simples[nu].dim, {(0, 0): 1} if nu == mu else {})
        for nu in labels
    ])
    x = A.solve(vectorize(target))
    if x is None:
        raise ConventionError("the representation on the simples is not surjective")
    f = x
    for _ in range(64):
        Lf = R.act(H.from_vector(f))
        f2 = Lf @ f
        if f2 == f:
            return H.from_vector(f)
        f3 = Lf @ f2
        f = f2.scale(3) - f3.scale(2)
    raise ConventionError("idempotent lifting did not converge")


@lru_cache(maxsize=None)
def projective_cover(n: int, e: int, mu: Sequence[int]) -> HModule:
    """P(D_mu) = H f as a submodule of the regular module."""
    mu = Partition(mu)
    H = algebra(n, e)
    f = primitive_idempotent(n, e, mu)
    B = spin(H, [f])
    return submodule(regular_module(H), B, label=f"P{mu}")
