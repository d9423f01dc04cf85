"""The Iwahori-Hecke algebra H_q(S_n) over Q(zeta_e) with q = zeta_e^r.

Relations are (T_i - q)(T_i + 1) = 0 together with the braid relations, so
T_w T_i = T_{w s_i} when l(w s_i) > l(w) and
T_w T_i = q T_{w s_i} + (q - 1) T_w otherwise.
"""
from __future__ import annotations

import os
from functools import cached_property
from math import gcd
from typing import Iterable, Mapping, Sequence

from ..cyclotomic import Cyclotomic, field, Scalar
from ..linalg import KMatrix
from .perms import PermTable, distinguished_reps, perm_table, young_subgroup_elements

DEFAULT_MAX_N = 6


class SizeGuardError(ValueError):
    """Raised when a construction exceeds the configured size guard."""


def max_n() -> int:
    return int(os.environ.get("VERTEXCALC_MAX_N", DEFAULT_MAX_N))


class HeckeAlgebra:
    """H_q(S_n) with q a primitive e-th root of unity."""

    def __init__(self, n: int, e: int, r: int = 1, guard: int | None = None):
        if n < 1:
            raise ValueError("n must be at least 1")
        if e < 2:
            raise ValueError("e must be at least 2")
        if gcd(r, e) != 1:
            raise ValueError("r must be coprime to e")
        limit = max_n() if guard is None else guard
        if n > limit:
            raise SizeGuardError(f"n={n} exceeds the size guard {limit}")
        self.n, self.e, self.r = n, e, r
        self.field = field(e)
        self.q = self.field.zeta_power(r)
        if not self.field.is_primitive_root(self.q):
            raise AssertionError("q is not a primitive e-th root of unity")
        self.q_inv = self.q.inverse()
        self.table: PermTable = perm_table(n)

    def __repr__(self) -> str:
        return f"HeckeAlgebra(n={self.n}, e={self.e})"

    @property
    def dim(self) -> int:
        return self.table.size

    # -- elements -----------------------------------------------------
    def element(self, terms: Mapping[int, Scalar] | None = None) -> "HElement":
        return HElement(self, {k: self.field(c) for k, c in (terms or {}).items()})

    def basis_element(self, w: int | Sequence[int]) -> "HElement":
        k = w if isinstance(w, int) else self.table.index[tuple(w)]
        return HElement(self, {k: self.field.one})

    def one(self) -> "HElement":
        return self.basis_element(0)

    def generator(self, i: int) -> "HElement":
        return self.basis_element(self.table.left[i][0])

    def young_sum(self, composition: Sequence[int]) -> "HElement":
        """x = sum of T_w over the Young subgroup."""
        return HElement(self, {k: self.field.one for k in young_subgroup_elements(tuple(composition))})

    def young_alternating_sum(self, composition: Sequence[int]) -> "HElement":
        """y = sum of (-q)^(-l(w)) T_w over the Young subgroup."""
        c = -self.q_inv
        return HElement(self, {
            k: c ** self.table.lengths[k] for k in young_subgroup_elements(tuple(composition))
        })

    def norm_element(self, composition: Sequence[int]) -> "HElement":
        """N = sum over distinguished d of q^(-l(d)) T_d T_{d^-1}."""
        total = self.element()
        for d in distinguished_reps(tuple(composition)):
            Td = self.basis_element(d)
            Tdi = self.basis_element(self.table.inv[d])
            total = total + (Td * Tdi).scaled(self.q_inv ** self.table.lengths[d])
        return total

    # -- regular representation --------------------------------------
    def left_matrix(self, i: int) -> KMatrix:
        """Matrix of left multiplication by T_i in the basis T_w."""
        return self._left_matrices[i]

    @cached_property
    def _left_matrices(self) -> dict[int, KMatrix]:
        t = self.table
        out = {}
        for i in range(1, self.n):
            entries = {}
            for k in range(t.size):
                j = t.left[i][k]
                if t.lengths[j] > t.lengths[k]:
                    entries[(j, k)] = self.field.one
                else:
                    entries[(j, k)] = self.q
                    entries[(k, k)] = self.q - 1
            out[i] = KMatrix.from_entries(self.field, t.size, t.size, entries)
        return out

    def right_matrix(self, i: int) -> KMatrix:
        return self._right_matrices[i]

    @cached_property
    def _right_matrices(self) -> dict[int, KMatrix]:
        t = self.table
        out = {}
        for i in range(1, self.n):
            entries = {}
            for k in range(t.size):
                j = t.right[i][k]
                if t.lengths[j] > t.lengths[k]:
                    entries[(j, k)] = self.field.one
                else:
                    entries[(j, k)] = self.q
                    entries[(k, k)] = self.q - 1
            out[i] = KMatrix.from_entries(self.field, t.size, t.size, entries)
        return out

    def to_vector(self, h: "HElement") -> KMatrix:
        return KMatrix.from_entries(self.field, self.dim, 1, {(k, 0): c for k, c in h.terms.items()})

    def from_vector(self, v: KMatrix) -> "HElement":
        terms = {}
        for k in range(self.dim):
            c = v.entry(k, 0)
            if c:
                terms[k] = c
        return HElement(self, terms)


class HElement:
    """A finite K-combination of the standard basis T_w, keyed by permutation index."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: HeckeAlgebra, terms: dict[int, Cyclotomic]):
        self.algebra = algebra
        self.terms = {k: c for k, c in terms.items() if not c.is_zero()}

    def coefficient(self, w: int) -> Cyclotomic:
        return self.terms.get(w, self.algebra.field.zero)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, HElement) and other.algebra is self.algebra and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "HElement") -> "HElement":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return HElement(self.algebra, out)

    def __sub__(self, other: "HElement") -> "HElement":
        return self + other.scaled(-1)

    def __neg__(self) -> "HElement":
        return self.scaled(-1)

    def scaled(self, c: Scalar) -> "HElement":
        c = self.algebra.field(c)
        return HElement(self.algebra, {k: v * c for k, v in self.terms.items()})

    def left_generator(self, i: int) -> "HElement":
        """T_i * self."""
        H = self.algebra
        t = H.table
        out: dict[int, Cyclotomic] = {}

        def acc(k, c):
            out[k] = out[k] + c if k in out else c

        qm1 = H.q - 1
        for k, c in self.terms.items():
            j = t.left[i][k]
            if t.lengths[j] > t.lengths[k]:
                acc(j, c)
            else:
                acc(j, c * H.q)
                acc(k, c * qm1)
        return HElement(H, out)

    def right_generator(self, i: int) -> "HElement":
        """self * T_i."""
        H = self.algebra
        t = H.table
        out: dict[int, Cyclotomic] = {}

        def acc(k, c):
            out[k] = out[k] + c if k in out else c

        qm1 = H.q - 1
        for k, c in self.terms.items():
            j = t.right[i][k]
            if t.lengths[j] > t.lengths[k]:
                acc(j, c)
            else:
                acc(j, c * H.q)
                acc(k, c * qm1)
        return HElement(H, out)

    def __mul__(self, other):
        if not isinstance(other, HElement):
            return self.scaled(other)
        H = self.algebra
        t = H.table
        # T_w * other along the parent chain w = s_i w'
        cache: dict[int, HElement] = {0: other}

        def times(k: int) -> HElement:
            if k not in cache:
                i, j = t.parent[k]
                cache[k] = times(j).left_generator(i)
            return cache[k]

        total: dict[int, Cyclotomic] = {}
        for k in sorted(self.terms, key=lambda k: t.lengths[k]):
            c = self.terms[k]
            for w, v in times(k).terms.items():
                total[w] = total[w] + c * v if w in total else c * v
        return HElement(H, total)

    def __rmul__(self, c):
        return self.scaled(c)

    def star(self) -> "HElement":
        """The anti-automorphism T_w -> T_{w^-1}."""
        inv = self.algebra.table.inv
        return HElement(self.algebra, {inv[k]: c for k, c in self.terms.items()})

    def sharp(self) -> "HElement":
        """The automorphism T_i -> (q - 1) - T_i."""
        H = self.algebra
        t = H.table
        cache: dict[int, HElement] = {0: H.one()}

        def image(k: int) -> HElement:
            if k not in cache:
                i, j = t.parent[k]
                prev = image(j)
                cache[k] = prev.scaled(H.q - 1) - prev.left_generator(i)
            return cache[k]

        total = H.element()
        for k, c in self.terms.items():
            total = total + image(k).scaled(c)
        return total

    def tau(self) -> Cyclotomic:
        """Coefficient of T_1."""
        return self.coefficient(0)

    def __repr__(self) -> str:
        t = self.algebra.table
        parts = [f"({c})*T{t.words[k]}" for k, c in sorted(self.terms.items())]
        return " + ".join(parts) if parts else "0"


def tau_pairing_rule(H: HeckeAlgebra, u: int, v: int) -> Cyclotomic:
    """The closed form tau(T_u T_v) = q^l(u) if v = u^-1, else 0."""
    if H.table.inv[u] == v:
        return H.q ** H.table.lengths[u]
    return H.field.zero


def elements_from(H: HeckeAlgebra, indices: Iterable[int]) -> list[HElement]:
    return [H.basis_element(k) for k in indices]
