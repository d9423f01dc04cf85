"""Grothendieck-group induction and restriction for Young subgroups.

Classes of representations of S_mu = S_{mu_1} x ... x S_{mu_s} are integer
combinations of label tuples (one partition per factor).  Induction and
restriction between a composition and its coarsenings are expanded with
Littlewood-Richardson coefficients.  Double cosets of Young subgroups are
contingency tables, which gives a class-level check of the Mackey formula.
"""
from __future__ import annotations

from dataclasses import dataclass
from collections import Counter
from functools import lru_cache
from itertools import product
from math import factorial, prod
from typing import Iterator, Mapping, Sequence

import numpy as np

from .blocks import ParabolicType
from .partitions import Partition, add, enumerate_partitions, is_e_core, syt_count

Label = tuple[Partition, ...]


@dataclass(frozen=True)
class YoungSubgroup:
    composition: tuple[int, ...]

    def __post_init__(self):
        comp = tuple(int(p) for p in self.composition)
        if any(p <= 0 for p in comp):
            raise ValueError(f"composition parts must be positive: {comp}")
        object.__setattr__(self, "composition", comp)

    @property
    def n(self) -> int:
        return sum(self.composition)

    @property
    def order(self) -> int:
        return prod(factorial(p) for p in self.composition)

    def parabolic_type(self) -> ParabolicType:
        return ParabolicType.of_composition(self.composition)


class KClass:
    """An integer combination of label tuples over a fixed ordered composition."""

    def __init__(self, composition: Sequence[int], terms: Mapping[Sequence[Sequence[int]], int] | None = None):
        self.ambient = YoungSubgroup(tuple(composition))
        self.terms: dict[Label, int] = {}
        for labels, c in (terms or {}).items():
            self.add_term(labels, c)

    @classmethod
    def basis(cls, composition: Sequence[int], labels: Sequence[Sequence[int]]) -> "KClass":
        return cls(composition, {tuple(Partition(l) for l in labels): 1})

    @property
    def composition(self) -> tuple[int, ...]:
        return self.ambient.composition

    def add_term(self, labels: Sequence[Sequence[int]], c: int) -> None:
        key = tuple(Partition(l) for l in labels)
        if len(key) != len(self.composition) or any(
            sum(l) != p for l, p in zip(key, self.composition)
        ):
            raise ValueError(f"label sizes {[sum(l) for l in key]} do not match {self.composition}")
        total = self.terms.get(key, 0) + c
        if total:
            self.terms[key] = total
        else:
            self.terms.pop(key, None)

    def __eq__(self, other) -> bool:
        return isinstance(other, KClass) and self.composition == other.composition and self.terms == other.terms

    def __add__(self, other: "KClass") -> "KClass":
        if other.composition != self.composition:
            raise ValueError("classes over different compositions")
        out = KClass(self.composition, self.terms)
        for k, c in other.terms.items():
            out.add_term(k, c)
        return out

    def scaled(self, c: int) -> "KClass":
        return KClass(self.composition, {k: c * v for k, v in self.terms.items()})

    def dimension(self) -> int:
        return sum(c * prod(syt_count(l) for l in k) for k, c in self.terms.items())

    def sorted_terms(self) -> list[tuple[Label, int]]:
        return sorted(self.terms.items(), key=lambda kv: [tuple(l) for l in kv[0]], reverse=True)

    def to_json(self) -> dict:
        return {
            "composition": list(self.composition),
            "terms": [{"labels": [list(l) for l in k], "coeff": c} for k, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "KClass":
        out = cls(data["composition"])
        for t in data["terms"]:
            out.add_term(t["labels"], int(t["coeff"]))
        return out

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*{tuple(str(l) for l in k)}" for k, c in self.sorted_terms())
        return f"KClass({self.composition}: {body or '0'})"


# -- Littlewood-Richardson coefficients ---------------------------------

@lru_cache(maxsize=None)
def _lr(lam: Partition, mu: Partition, nu: Partition) -> int:
    if len(lam) > len(nu) or any(lam[i] > nu[i] for i in range(len(lam))):
        return 0
    if not mu:
        return 1 if lam == nu else 0
    rows = [(i, lam.part(i + 1), nu[i]) for i in range(len(nu))]
    # cells per row: columns lam_i+1 .. nu_i; fill rows top-down, each right-to-left
    content = [0] * len(mu)
    filling: dict[tuple[int, int], int] = {}

    def fill_row(r: int) -> int:
        if r == len(rows):
            return 1 if content == list(mu) else 0
        i, start, end = rows[r]
        return fill_cell(r, i, end, start, len(mu))

    def fill_cell(r: int, i: int, j: int, start: int, cap: int) -> int:
        # j: current column (1-based), moving left; entries weakly decrease leftwards
        if j == start:
            return fill_row(r + 1)
        total = 0
        above = filling.get((i - 1, j))
        low = above + 1 if above is not None else 1
        for k in range(low, cap + 1):
            if content[k - 1] >= mu[k - 1]:
                continue
            if k > 1 and content[k - 1] + 1 > content[k - 2]:
                continue
            content[k - 1] += 1
            filling[(i, j)] = k
            total += fill_cell(r, i, j - 1, start, k)
            del filling[(i, j)]
            content[k - 1] -= 1
        return total

    return fill_row(0)


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """c^nu_{lam, mu}: number of LR skew tableaux of shape nu/lam and content mu.

    Returns 0 when |lam| + |mu| != |nu|.
    """
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size + mu.size != nu.size:
        return 0
    return _lr(lam, mu, nu)


def schur_product(lam: Sequence[int], mu: Sequence[int]) -> dict[Partition, int]:
    """Expansion of s_lam * s_mu in the Schur basis."""
    return dict(_schur_product(Partition(lam), Partition(mu)))


@lru_cache(maxsize=None)
def _schur_product(lam: Partition, mu: Partition) -> tuple[tuple[Partition, int], ...]:
    n = lam.size + mu.size
    out = []
    for nu in enumerate_partitions(n):
        c = _lr(lam, mu, nu) if lam.size + mu.size == nu.size else 0
        if c:
            out.append((nu, c))
    return tuple(out)


@lru_cache(maxsize=None)
def _restrict_two(lam: Partition, a: int) -> tuple[tuple[Partition, Partition, int], ...]:
    """Restriction of S^lam from S_{|lam|} to S_a x S_{|lam|-a}."""
    m = lam.size
    out = []
    for alpha in enumerate_partitions(a):
        for beta in enumerate_partitions(m - a):
            c = lr_coefficient(alpha, beta, lam)
            if c:
                out.append((alpha, beta, c))
    return tuple(out)


@lru_cache(maxsize=None)
def _restrict_label(lam: Partition, parts: tuple[int, ...]) -> dict[Label, int]:
    """Restriction of one label along a composition of its size (cached, do not mutate)."""
    if len(parts) == 1:
        return {(lam,): 1}
    out: dict[Label, int] = {}
    for alpha, beta, c in _restrict_two(lam, parts[0]):
        for rest, d in _restrict_label(beta, parts[1:]).items():
            key = (alpha,) + rest
            out[key] = out.get(key, 0) + c * d
    return out


@lru_cache(maxsize=None)
def _induce_labels(labels: tuple[Partition, ...]) -> dict[Partition, int]:
    """Iterated Schur product of a tuple of labels (cached, do not mutate)."""
    if not labels:
        return {Partition(): 1}
    out: dict[Partition, int] = {}
    for nu, c in _induce_labels(labels[:-1]).items():
        for gamma, d in _schur_product(nu, labels[-1]):
            out[gamma] = out.get(gamma, 0) + c * d
    return out


def _split_points(coarse: Sequence[int], fine: Sequence[int]) -> list[list[int]]:
    """Group the parts of ``fine`` into consecutive runs summing to the parts of ``coarse``."""
    groups, k = [], 0
    for c in coarse:
        run, s = [], 0
        while s < c:
            if k >= len(fine):
                raise ValueError(f"{tuple(fine)} does not refine {tuple(coarse)}")
            run.append(fine[k])
            s += fine[k]
            k += 1
        if s != c:
            raise ValueError(f"{tuple(fine)} does not refine {tuple(coarse)}")
        groups.append(run)
    if k != len(fine):
        raise ValueError(f"{tuple(fine)} does not refine {tuple(coarse)}")
    return groups


def induce_class(x: KClass, target: Sequence[int] | None = None) -> KClass:
    """Induce to a coarsening of the ambient composition (default: the whole group)."""
    target = (x.ambient.n,) if target is None else tuple(target)
    groups = _split_points(target, x.composition)
    out = KClass(target)
    for labels, c in x.terms.items():
        pieces, k = [], 0
        for run in groups:
            pieces.append(_induce_labels(tuple(labels[k:k + len(run)])))
            k += len(run)
        for combo in product(*(p.items() for p in pieces)):
            out.add_term(tuple(nu for nu, _ in combo), c * prod(d for _, d in combo))
    return out


def restrict_class(x: KClass, target: Sequence[int]) -> KClass:
    """Restrict to a refinement of the ambient composition."""
    target = tuple(target)
    groups = _split_points(x.composition, target)
    out = KClass(target)
    for labels, c in x.terms.items():
        pieces = [_restrict_label(lam, tuple(run)) for lam, run in zip(labels, groups)]
        for combo in product(*(p.items() for p in pieces)):
            out.add_term(sum((k for k, _ in combo), ()), c * prod(d for _, d in combo))
    return out


def pairing(x: KClass, y: KClass) -> int:
    """Coefficient pairing; the Specht classes are orthonormal."""
    if x.composition != y.composition:
        raise ValueError("pairing needs equal compositions")
    return sum(c * y.terms.get(k, 0) for k, c in x.terms.items())


def basis_classes(composition: Sequence[int]) -> Iterator[KClass]:
    for labels in product(*(enumerate_partitions(p) for p in composition)):
        yield KClass.basis(composition, labels)


# -- double cosets and Mackey --------------------------------------------

@dataclass(frozen=True)
class DoubleCoset:
    """A double coset S_nu u S_mu as a contingency table (rows nu, columns mu)."""

    table: tuple[tuple[int, ...], ...]

    @property
    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(r) for r in self.table)

    @property
    def col_sums(self) -> tuple[int, ...]:
        return tuple(sum(c) for c in zip(*self.table)) if self.table else ()

    def intersection_type(self) -> ParabolicType:
        return ParabolicType(tuple(a for r in self.table for a in r if a))

    def intersection_order(self) -> int:
        return prod(factorial(a) for r in self.table for a in r)


@lru_cache(maxsize=None)
def _tables(rows: tuple[int, ...], cols: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """All tables with the given margins, lexicographically decreasing (cached)."""
    if not rows:
        return ((),) if all(c == 0 for c in cols) else ()
    if len(rows) == 1:
        return ((cols,),) if sum(cols) == rows[0] else ()
    tails = [0] * (len(cols) + 1)
    for k in range(len(cols) - 1, -1, -1):
        tails[k] = tails[k + 1] + cols[k]

    def row_fill(k: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if k == len(cols):
            yield ()
            return
        # the entries still to be placed must fit into the later columns
        low = max(0, remaining - tails[k + 1])
        for a in range(min(remaining, cols[k]), low - 1, -1):
            for rest in row_fill(k + 1, remaining - a):
                yield (a,) + rest

    out = []
    for first in row_fill(0, rows[0]):
        rest_cols = tuple(c - a for c, a in zip(cols, first))
        for rest in _tables(rows[1:], rest_cols):
            out.append((first,) + rest)
    return tuple(out)


def double_cosets(nu: Sequence[int], mu: Sequence[int]) -> list[DoubleCoset]:
    """All tables with row sums nu and column sums mu, lexicographically decreasing."""
    nu, mu = tuple(nu), tuple(mu)
    if sum(nu) != sum(mu):
        raise ValueError("compositions of different sizes")
    return [DoubleCoset(t) for t in _tables(nu, mu)]


def _plan_items(nu: tuple[int, ...], mu: tuple[int, ...]) -> Iterator[tuple]:
    """Per table: the column-wise refinement of mu, the regrouping order and the row-wise composition."""
    r, c = len(nu), len(mu)
    col_major = [i * c + j for j in range(c) for i in range(r)]
    for table in _tables(nu, mu):
        flat = [a for row in table for a in row]
        nz_col = [k for k in col_major if flat[k]]
        fine = tuple(flat[k] for k in nz_col)
        # position of each nonzero entry in the column-major fine composition
        pos = {k: t for t, k in enumerate(nz_col)}
        order = tuple(pos[k] for k in range(r * c) if flat[k])
        row_comp = tuple(a for a in flat if a)
        yield fine, order, row_comp


@lru_cache(maxsize=None)
def _mackey_plan(nu: tuple[int, ...], mu: tuple[int, ...]) -> tuple:
    return tuple(_plan_items(nu, mu))


def mackey_sides(nu: Sequence[int], x: KClass) -> tuple[KClass, KClass]:
    """Both sides of Res_nu Ind^{S_n}_{S_mu} x = sum over tables of Ind Res.

    For a table A the class of x is restricted along each column split
    (a_1j, ..., a_rj) of mu_j, regrouped row by row, and induced within each
    row to S_{nu_i}.  Zero entries carry the trivial group and are dropped.
    """
    nu = tuple(nu)
    lhs = restrict_class(induce_class(x), nu)
    rhs = KClass(nu)
    for fine, order, row_comp in _mackey_plan(nu, x.composition):
        res = restrict_class(x, fine)
        regrouped = KClass(row_comp)
        for labels, c in res.terms.items():
            regrouped.add_term(tuple(labels[p] for p in order), c)
        for labels, c in induce_class(regrouped, nu).terms.items():
            rhs.add_term(labels, c)
    return lhs, rhs


def mackey_check(nu: Sequence[int], mu: Sequence[int], x: KClass) -> tuple[bool, KClass, KClass]:
    if tuple(mu) != x.composition:
        raise ValueError("class does not live on the given composition")
    lhs, rhs = mackey_sides(nu, x)
    return lhs == rhs, lhs, rhs


@lru_cache(maxsize=None)
def class_basis(composition: tuple[int, ...]) -> tuple[Label, ...]:
    """Basis label tuples of a composition, in a fixed order."""
    return tuple(product(*(enumerate_partitions(p) for p in composition)))


@lru_cache(maxsize=None)
def _basis_index(composition: tuple[int, ...]) -> dict[Label, int]:
    return {k: i for i, k in enumerate(class_basis(composition))}


@lru_cache(maxsize=None)
def induction_matrix(source: tuple[int, ...], target: tuple[int, ...]) -> np.ndarray:
    """Integer matrix of induction from a composition to a coarsening (columns = source basis)."""
    rows = _basis_index(target)
    M = np.zeros((len(rows), len(class_basis(source))), dtype=np.int64)
    for j, labels in enumerate(class_basis(source)):
        for k, c in induce_class(KClass(source, {labels: 1}), target).terms.items():
            M[rows[k], j] = c
    return M


@lru_cache(maxsize=None)
def restriction_matrix(source: tuple[int, ...], target: tuple[int, ...]) -> np.ndarray:
    """Integer matrix of restriction from a composition to a refinement."""
    rows = _basis_index(target)
    M = np.zeros((len(rows), len(class_basis(source))), dtype=np.int64)
    for j, labels in enumerate(class_basis(source)):
        for k, c in restrict_class(KClass(source, {labels: 1}), target).terms.items():
            M[rows[k], j] = c
    return M


@lru_cache(maxsize=None)
def _regroup_matrix(fine: tuple[int, ...], order: tuple[int, ...], row_comp: tuple[int, ...]) -> np.ndarray:
    rows = _basis_index(row_comp)
    src = class_basis(fine)
    M = np.zeros((len(rows), len(src)), dtype=np.int64)
    for j, labels in enumerate(src):
        M[rows[tuple(labels[p] for p in order)], j] = 1
    return M


def mackey_matrices(nu: Sequence[int], mu: Sequence[int]) -> tuple[np.ndarray, np.ndarray]:
    """Both sides of the Mackey formula as integer matrices on the basis classes of mu.

    Column j of each matrix is the corresponding side of ``mackey_sides``
    applied to the j-th basis class, so equality of the matrices is the
    Mackey identity for every basis class at once.
    """
    nu, mu = tuple(nu), tuple(mu)
    n = sum(mu)
    lhs = restriction_matrix((n,), nu) @ induction_matrix(mu, (n,))
    rhs = np.zeros_like(lhs)
    # many tables share the same refinement and regrouping; add those terms once, with multiplicity
    for (fine, order, row_comp), mult in Counter(_plan_items(nu, mu)).items():
        term = induction_matrix(row_comp, nu) @ _regroup_matrix(fine, order, row_comp) @ restriction_matrix(mu, fine)
        rhs += mult * term
    return lhs, rhs


def verify_mackey_classes(n: int) -> dict:
    """Mackey identity for every ordered pair of compositions of n and every basis class."""
    from .partitions import compositions

    pairs = classes = 0
    failures = []
    for nu in compositions(n):
        for mu in compositions(n):
            lhs, rhs = mackey_matrices(nu, mu)
            pairs += 1
            classes += lhs.shape[1]
            for j in np.nonzero((lhs != rhs).any(axis=0))[0]:
                failures.append({"nu": list(nu), "mu": list(mu), "labels": [list(l) for l in class_basis(mu)[j]]})
    return {"n": n, "pairs": pairs, "classes": classes, "failures": failures}


# -- the two LR facts ------------------------------------------------------

def verify_lr_first_row_bound(max_size: int) -> dict:
    """Check c^nu_{lam,mu} != 0 implies nu_1 <= lam_1 + mu_1 for |nu| <= max_size."""
    checked, violations = 0, []
    for n in range(max_size + 1):
        for a in range(n + 1):
            for lam in enumerate_partitions(a):
                for mu in enumerate_partitions(n - a):
                    for nu in enumerate_partitions(n):
                        checked += 1
                        if lr_coefficient(lam, mu, nu) and nu.part(1) > lam.part(1) + mu.part(1):
                            violations.append([list(lam), list(mu), list(nu)])
    return {"max_size": max_size, "checked": checked, "violations": violations}


def verify_corner_coefficient(rho: Sequence[int], e: int, w: int) -> bool:
    """c^{rho + (ew)}_{rho, (ew)} == 1 for an e-core rho."""
    if not is_e_core(rho, e):
        raise ValueError(f"{tuple(rho)} is not an {e}-core")
    row = Partition((e * w,)) if w else Partition()
    return lr_coefficient(rho, row, add(rho, row)) == 1
