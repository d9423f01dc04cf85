"""Level-1 Fock space and the LLT algorithm for e-restricted partitions.

Conventions (pinned by the test-suite against the Hecke-side oracle):

* ``f_i |lam> = sum_A v^N |lam + A>`` over addable i-cells A, with
  ``N = #addable i-cells strictly below A - #removable i-cells strictly below A``;
* divided powers use the balanced quantum factorial
  ``[m] = v^{1-m} + v^{3-m} + ... + v^{m-1}``;
* ladders of an e-restricted partition are ``j + (e-1)(i-1)``.

With these choices ``G(mu) = |mu> + sum_{lam ▷ mu} d_{lam,mu}(v) |lam>`` and
``d_{lam,mu}(v)`` lies in ``v Z[v]`` off the diagonal.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Mapping, Sequence

from .partitions import (
    Partition,
    add_cell,
    addable_cells,
    dominance_leq,
    e_core,
    enumerate_partitions,
    is_e_restricted,
    partition_index,
    removable_cells,
    residue,
    restricted_partitions,
)


class ConventionError(RuntimeError):
    """An LLT step contradicted the pinned v-power conventions."""


class LaurentPoly:
    """Finitely supported integer Laurent polynomial in v."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        self.terms = {k: c for k, c in (terms or {}).items() if c != 0}

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({k: c * other for k, c in self.terms.items()})
        out: dict[int, int] = defaultdict(int)
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                out[a + b] += x * y
        return LaurentPoly(out)

    __rmul__ = __mul__

    def bar(self) -> "LaurentPoly":
        return LaurentPoly({-k: c for k, c in self.terms.items()})

    def at_one(self) -> int:
        return sum(self.terms.values())

    def min_exp(self) -> int:
        return min(self.terms)

    def max_exp(self) -> int:
        return max(self.terms)

    def divexact(self, d: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises ConventionError on a nonzero remainder."""
        if not d:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        rem = LaurentPoly(self.terms)
        out: dict[int, int] = {}
        dtop = d.max_exp()
        lead = d.terms[dtop]
        floor = self.min_exp() - d.min_exp() if self else 0
        while rem:
            k = rem.max_exp() - dtop
            c, r = divmod(rem.terms[rem.max_exp()], lead)
            if r or k < floor:
                raise ConventionError(f"{self} is not divisible by {d}")
            out[k] = c
            rem = rem - LaurentPoly.monomial(k, c) * d
        return LaurentPoly(out)

    def to_json(self) -> dict[str, int]:
        return {str(k): c for k, c in sorted(self.terms.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "LaurentPoly":
        return cls({int(k): int(c) for k, c in data.items()})

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for k in sorted(self.terms):
            c = self.terms[k]
            mono = "" if k == 0 else ("v" if k == 1 else f"v^{k}")
            if not mono:
                bits.append(str(c))
            elif c == 1:
                bits.append(mono)
            elif c == -1:
                bits.append("-" + mono)
            else:
                bits.append(f"{c}{mono}")
        return " + ".join(bits)


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)


def quantum_int(m: int) -> LaurentPoly:
    return LaurentPoly({m - 1 - 2 * k: 1 for k in range(m)})


def quantum_factorial(m: int) -> LaurentPoly:
    out = ONE
    for j in range(1, m + 1):
        out = out * quantum_int(j)
    return out


def quantum_binomial(a: int, b: int) -> LaurentPoly:
    return quantum_factorial(a).divexact(quantum_factorial(b) * quantum_factorial(a - b))


class FockVector(dict):
    """Finitely supported map Partition -> LaurentPoly (zero terms dropped)."""

    @classmethod
    def basis(cls, lam: Sequence[int]) -> "FockVector":
        return cls({Partition(lam): ONE})

    def add_term(self, lam: Partition, coeff: LaurentPoly) -> None:
        new = self.get(lam, ZERO) + coeff
        if new:
            self[lam] = new
        else:
            self.pop(lam, None)

    def __add__(self, other: "FockVector") -> "FockVector":
        out = FockVector(self)
        for lam, c in other.items():
            out.add_term(lam, c)
        return out

    def __sub__(self, other: "FockVector") -> "FockVector":
        out = FockVector(self)
        for lam, c in other.items():
            out.add_term(lam, -c)
        return out

    def scaled(self, c: LaurentPoly) -> "FockVector":
        out = FockVector()
        for lam, x in self.items():
            out.add_term(lam, x * c)
        return out


def f_single(i: int, e: int, x: FockVector) -> FockVector:
    out = FockVector()
    for lam, coeff in x.items():
        add_i = [c for c in addable_cells(lam) if residue(c, e) == i]
        rem_i = [c for c in removable_cells(lam) if residue(c, e) == i]
        for cell in add_i:
            below = sum(1 for c in add_i if c[0] > cell[0]) - sum(1 for c in rem_i if c[0] > cell[0])
            out.add_term(add_cell(lam, cell), coeff * LaurentPoly.monomial(below))
    return out


def f_divided(i: int, m: int, x: FockVector, e: int) -> FockVector:
    """Divided power f_i^(m) x = f_i^m x / [m]!, with exact division checked."""
    if m < 1:
        raise ValueError("divided power needs m >= 1")
    y = x
    for _ in range(m):
        y = f_single(i, e, y)
    fact = quantum_factorial(m)
    return FockVector({lam: c.divexact(fact) for lam, c in y.items()})


def ladder_sequence(mu: Sequence[int], e: int) -> list[tuple[int, int]]:
    """(residue, multiplicity) per ladder of an e-restricted partition, ladders increasing."""
    mu = Partition(mu)
    if not is_e_restricted(mu, e):
        raise ValueError(f"{mu} is not {e}-restricted")
    ladders: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for (i, j) in mu.cells():
        ladders[j + (e - 1) * (i - 1)].append((i, j))
    out = []
    for lad in sorted(ladders):
        cells = ladders[lad]
        res = {residue(c, e) for c in cells}
        if len(res) != 1:
            raise AssertionError(f"ladder {lad} of {mu} has several residues")
        out.append((res.pop(), len(cells)))
    return out


def bar_invariant_part(c: LaurentPoly) -> LaurentPoly:
    """The bar-invariant m with c - m supported in strictly positive degrees."""
    out: dict[int, int] = {}
    if 0 in c.terms:
        out[0] = c.terms[0]
    for k, x in c.terms.items():
        if k < 0:
            out[k] = out.get(k, 0) + x
            out[-k] = out.get(-k, 0) + x
    return LaurentPoly(out)


@dataclass(frozen=True)
class DecompositionMatrix:
    n: int
    e: int
    rows: tuple[Partition, ...]
    cols: tuple[Partition, ...]
    entries: tuple[tuple[LaurentPoly, ...], ...]

    def entry(self, lam: Sequence[int], mu: Sequence[int]) -> LaurentPoly:
        return self.entries[self.rows.index(Partition(lam))][self.cols.index(Partition(mu))]

    def column(self, mu: Sequence[int]) -> dict[Partition, LaurentPoly]:
        j = self.cols.index(Partition(mu))
        return {lam: self.entries[i][j] for i, lam in enumerate(self.rows) if self.entries[i][j]}

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "e": self.e,
            "rows": [list(r) for r in self.rows],
            "cols": [list(c) for c in self.cols],
            "entries": [[x.to_json() for x in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, data: dict) -> "DecompositionMatrix":
        return cls(
            data["n"],
            data["e"],
            tuple(Partition(r) for r in data["rows"]),
            tuple(Partition(c) for c in data["cols"]),
            tuple(tuple(LaurentPoly.from_json(x) for x in row) for row in data["entries"]),
        )


def canonical_basis_vector(mu: Sequence[int], e: int, known: Mapping[Partition, FockVector]) -> FockVector:
    """G(mu) from the ladder vector A(mu), given G(lam) for every restricted lam ▷ mu."""
    mu = Partition(mu)
    x = FockVector.basis(())
    for res, mult in ladder_sequence(mu, e):
        x = f_divided(res, mult, x, e)
    if x.get(mu) != ONE:
        raise ConventionError(f"A({mu}) has coefficient {x.get(mu)} on |{mu}>")
    order = partition_index(mu.size)
    for _ in range(10 * len(order) + 10):
        bad = [lam for lam, c in x.items() if lam != mu and c.min_exp() <= 0]
        if not bad:
            return x
        lam = max(bad, key=lambda p: order[p])  # dominance-least first
        if not dominance_leq(mu, lam):
            raise ConventionError(f"correction at {lam} not above {mu}")
        if lam not in known:
            raise ConventionError(f"correction needs G({lam}) which is not restricted or not yet known")
        x = x - known[lam].scaled(bar_invariant_part(x[lam]))
    raise ConventionError(f"correction loop for G({mu}) did not terminate")


def llt_canonical_basis(n: int, e: int) -> DecompositionMatrix:
    """Decomposition matrix d_{lam,mu}(v) for H_q(S_n), q a primitive e-th root of 1."""
    if n < 0 or e < 2:
        raise ValueError("need n >= 0 and e >= 2")
    return _llt_cached(n, e)


_LLT_CACHE: dict[tuple[int, int], DecompositionMatrix] = {}


def _llt_cached(n: int, e: int) -> DecompositionMatrix:
    if (n, e) in _LLT_CACHE:
        return _LLT_CACHE[(n, e)]
    rows = enumerate_partitions(n)
    cols = restricted_partitions(n, e)
    known: dict[Partition, FockVector] = {}
    for mu in cols:  # decreasing dominance: every lam ▷ mu is done already
        known[mu] = canonical_basis_vector(mu, e, known)
    entries = tuple(tuple(known[mu].get(lam, ZERO) for mu in cols) for lam in rows)
    D = DecompositionMatrix(n, e, rows, cols, entries)
    _LLT_CACHE[(n, e)] = D
    return D


def evaluate_at_one(D: DecompositionMatrix) -> list[list[int]]:
    return [[x.at_one() for x in row] for row in D.entries]


def specht_to_simple(D: DecompositionMatrix, x: Mapping[Sequence[int], int]) -> dict[Partition, int]:
    """Rewrite sum_lam x_lam [S_lam] as a combination of simple classes [D_mu]."""
    at_one = evaluate_at_one(D)
    out: dict[Partition, int] = defaultdict(int)
    for lam, coeff in x.items():
        i = D.rows.index(Partition(lam))
        for j, mu in enumerate(D.cols):
            if at_one[i][j]:
                out[mu] += coeff * at_one[i][j]
    return {mu: c for mu, c in out.items() if c}


def block_columns(D: DecompositionMatrix) -> dict[Partition, list[Partition]]:
    """Column labels grouped by e-core."""
    out: dict[Partition, list[Partition]] = defaultdict(list)
    for mu in D.cols:
        out[e_core(mu, D.e)].append(mu)
    return dict(out)

