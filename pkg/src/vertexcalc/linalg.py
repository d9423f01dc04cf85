"""Exact linear algebra over Q(zeta_e) through the rational blow-up.

A K-matrix A with r rows and c columns is stored as the rational matrix of
size (phi*r) x (phi*c) whose (i, j) block is the matrix of multiplication
by a_ij in the basis 1, zeta, ..., zeta^(phi-1).  Sums, products and
inverses commute with the blow-up, so the heavy work runs in
``flint.fmpq_mat``.  Kernels and solutions are read off the rational
reduced row echelon form: a K-column is pivotal exactly when all of its
phi rational columns are, so the K-structure survives elimination.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from flint import fmpq, fmpq_mat

from .cyclotomic import Cyclotomic, CyclotomicField, Scalar


@lru_cache(maxsize=None)
def _zeta_power_coords(fld: CyclotomicField) -> tuple[tuple[fmpq, ...], ...]:
    """Coordinates of zeta^k for 0 <= k <= 2*phi - 2."""
    return tuple(tuple(fld.zeta_power(k).coeffs()) for k in range(2 * fld.degree - 1))


def _mult_block(fld: CyclotomicField, coeffs: Sequence[fmpq]) -> list[list[fmpq]]:
    """Matrix of multiplication by the element with the given coordinates."""
    phi = fld.degree
    zp = _zeta_power_coords(fld)
    block = [[fmpq(0)] * phi for _ in range(phi)]
    for k, a in enumerate(coeffs):
        if a == 0:
            continue
        for c in range(phi):
            col = zp[k + c]
            for r in range(phi):
                if col[r] != 0:
                    block[r][c] += a * col[r]
    return block


class KMatrix:
    """Dense matrix over Q(zeta_e), immutable by convention."""

    __slots__ = ("field", "nrows", "ncols", "Q")

    def __init__(self, fld: CyclotomicField, nrows: int, ncols: int, blowup: fmpq_mat):
        phi = fld.degree
        if blowup.nrows() != phi * nrows or blowup.ncols() != phi * ncols:
            raise ValueError("blow-up has the wrong shape")
        self.field = fld
        self.nrows = nrows
        self.ncols = ncols
        self.Q = blowup

    # -- construction -------------------------------------------------
    @classmethod
    def zeros(cls, fld: CyclotomicField, nrows: int, ncols: int) -> "KMatrix":
        phi = fld.degree
        return cls(fld, nrows, ncols, fmpq_mat(phi * nrows, phi * ncols))

    @classmethod
    def identity(cls, fld: CyclotomicField, n: int) -> "KMatrix":
        phi = fld.degree
        Q = fmpq_mat(phi * n, phi * n)
        for i in range(phi * n):
            Q[i, i] = 1
        return cls(fld, n, n, Q)

    @classmethod
    def from_rows(cls, fld: CyclotomicField, rows: Sequence[Sequence[Scalar]], ncols: int | None = None) -> "KMatrix":
        nrows = len(rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        return cls.from_entries(fld, nrows, ncols, {
            (i, j): a for i, row in enumerate(rows) for j, a in enumerate(row)
        })

    @classmethod
    def from_entries(cls, fld: CyclotomicField, nrows: int, ncols: int, entries) -> "KMatrix":
        """Build from a mapping (i, j) -> scalar; missing entries are zero."""
        phi = fld.degree
        Q = fmpq_mat(phi * nrows, phi * ncols)
        for (i, j), a in entries.items():
            a = fld(a)
            if a.is_zero():
                continue
            if a.is_rational():
                c = a.coeffs()[0]
                for r in range(phi):
                    Q[phi * i + r, phi * j + r] = c
                continue
            block = _mult_block(fld, a.coeffs())
            for r in range(phi):
                for c in range(phi):
                    if block[r][c] != 0:
                        Q[phi * i + r, phi * j + c] = block[r][c]
        return cls(fld, nrows, ncols, Q)

    @classmethod
    def from_coords(cls, fld: CyclotomicField, nrows: int, ncols: int, coords) -> "KMatrix":
        """Build from a mapping (i, j) -> coordinate list of length phi."""
        return cls.from_entries(fld, nrows, ncols, {
            ij: fld.from_coeffs(c) for ij, c in coords.items() if any(x != 0 for x in c)
        })

    @classmethod
    def column(cls, fld: CyclotomicField, values: Sequence[Scalar]) -> "KMatrix":
        return cls.from_entries(fld, len(values), 1, {(i, 0): a for i, a in enumerate(values)})

    # -- access -------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def entry_coords(self, i: int, j: int) -> list[fmpq]:
        phi = self.field.degree
        return [self.Q[phi * i + r, phi * j] for r in range(phi)]

    def entry(self, i: int, j: int) -> Cyclotomic:
        return self.field.from_coeffs(self.entry_coords(i, j))

    def __getitem__(self, ij: tuple[int, int]) -> Cyclotomic:
        return self.entry(*ij)

    def to_lists(self) -> list[list[Cyclotomic]]:
        return [[self.entry(i, j) for j in range(self.ncols)] for i in range(self.nrows)]

    def columns(self) -> list["KMatrix"]:
        return [self.submatrix(range(self.nrows), [j]) for j in range(self.ncols)]

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> "KMatrix":
        rows, cols = list(rows), list(cols)
        phi = self.field.degree
        Q = fmpq_mat(phi * len(rows), phi * len(cols))
        src = self.Q
        for a, i in enumerate(rows):
            for b, j in enumerate(cols):
                for r in range(phi):
                    for c in range(phi):
                        x = src[phi * i + r, phi * j + c]
                        if x != 0:
                            Q[phi * a + r, phi * b + c] = x
        return KMatrix(self.field, len(rows), len(cols), Q)

    # -- arithmetic ---------------------------------------------------
    def _check_same(self, other: "KMatrix") -> None:
        if other.field is not self.field:
            raise ValueError("matrices over different fields")
        if other.shape != self.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "KMatrix") -> "KMatrix":
        self._check_same(other)
        return KMatrix(self.field, self.nrows, self.ncols, self.Q + other.Q)

    def __sub__(self, other: "KMatrix") -> "KMatrix":
        self._check_same(other)
        return KMatrix(self.field, self.nrows, self.ncols, self.Q - other.Q)

    def __neg__(self) -> "KMatrix":
        return KMatrix(self.field, self.nrows, self.ncols, -self.Q)

    def __matmul__(self, other: "KMatrix") -> "KMatrix":
        if other.field is not self.field:
            raise ValueError("matrices over different fields")
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        return KMatrix(self.field, self.nrows, other.ncols, self.Q * other.Q)

    def scale(self, a: Scalar) -> "KMatrix":
        a = self.field(a)
        if a.is_rational():
            return KMatrix(self.field, self.nrows, self.ncols, self.Q * a.coeffs()[0])
        # scalar matrices commute with every blow-up, so multiply on the right
        return self @ KMatrix.identity(self.field, self.ncols).diag_scaled(a)

    def diag_scaled(self, a: Cyclotomic) -> "KMatrix":
        """a * I for a square identity of this size (helper for scale)."""
        return KMatrix.from_entries(self.field, self.nrows, self.ncols, {(i, i): a for i in range(self.nrows)})

    def __rmul__(self, a: Scalar) -> "KMatrix":
        return self.scale(a)

    def __mul__(self, a: Scalar) -> "KMatrix":
        return self.scale(a)

    def __eq__(self, other) -> bool:
        return isinstance(other, KMatrix) and self.shape == other.shape and self.Q == other.Q

    __hash__ = None  # type: ignore[assignment]

    def is_zero(self) -> bool:
        return self.Q == fmpq_mat(self.Q.nrows(), self.Q.ncols())

    def transpose(self) -> "KMatrix":
        phi = self.field.degree
        coords = {}
        for i in range(self.nrows):
            for j in range(self.ncols):
                c = self.entry_coords(i, j)
                if any(x != 0 for x in c):
                    coords[(j, i)] = c
        return KMatrix.from_coords(self.field, self.ncols, self.nrows, coords)

    def trace(self) -> Cyclotomic:
        if self.nrows != self.ncols:
            raise ValueError("trace of a non-square matrix")
        phi = self.field.degree
        total = [fmpq(0)] * phi
        for i in range(self.nrows):
            for r in range(phi):
                total[r] += self.Q[phi * i + r, phi * i]
        return self.field.from_coeffs(total)

    def inverse(self) -> "KMatrix":
        return KMatrix(self.field, self.ncols, self.nrows, self.Q.inv())

    def rank(self) -> int:
        return self.Q.rank() // self.field.degree

    # -- elimination --------------------------------------------------
    def _rref_pivots(self, Q: fmpq_mat) -> tuple[fmpq_mat, list[int]]:
        R, rank = Q.rref()
        pivots = []
        col = 0
        ncols = Q.ncols()
        for i in range(rank):
            while R[i, col] == 0:
                col += 1
            pivots.append(col)
            col += 1
            if col > ncols:
                break
        return R, pivots

    def kernel(self) -> "KMatrix":
        """Columns form a K-basis of {x : A x = 0}."""
        phi = self.field.degree
        R, pivots = self._rref_pivots(self.Q)
        pivot_set = set(pivots)
        free = [j for j in range(self.ncols) if phi * j not in pivot_set]
        coords: dict[tuple[int, int], list[fmpq]] = {}
        for k, f in enumerate(free):
            coords[(f, k)] = [fmpq(1)] + [fmpq(0)] * (phi - 1)
            for i, p in enumerate(pivots):
                x = R[i, phi * f]
                if x != 0:
                    coords.setdefault((p // phi, k), [fmpq(0)] * phi)[p % phi] = -x
        return KMatrix.from_coords(self.field, self.ncols, len(free), coords)

    def solve(self, B: "KMatrix") -> "KMatrix | None":
        """Some X with A X = B, or None when the system is inconsistent."""
        if B.nrows != self.nrows:
            raise ValueError("right-hand side has the wrong number of rows")
        phi = self.field.degree
        aug = hstack([self, B])
        R, pivots = self._rref_pivots(aug.Q)
        ncols_a = phi * self.ncols
        if pivots and pivots[-1] >= ncols_a:
            return None
        coords: dict[tuple[int, int], list[fmpq]] = {}
        for k in range(B.ncols):
            for i, p in enumerate(pivots):
                x = R[i, ncols_a + phi * k]
                if x != 0:
                    coords.setdefault((p // phi, k), [fmpq(0)] * phi)[p % phi] = x
        return KMatrix.from_coords(self.field, self.ncols, B.ncols, coords)

    def __repr__(self) -> str:
        return f"KMatrix({self.nrows}x{self.ncols} over Q(zeta_{self.field.e}))"


def _paste(fld: CyclotomicField, nrows: int, ncols: int, pieces: list[tuple[int, int, KMatrix]]) -> KMatrix:
    phi = fld.degree
    Q = fmpq_mat(phi * nrows, phi * ncols)
    for r0, c0, M in pieces:
        src = M.Q
        for i in range(src.nrows()):
            for j in range(src.ncols()):
                x = src[i, j]
                if x != 0:
                    Q[phi * r0 + i, phi * c0 + j] = x
    return KMatrix(fld, nrows, ncols, Q)


def hstack(mats: Sequence[KMatrix]) -> KMatrix:
    fld = mats[0].field
    nrows = mats[0].nrows
    pieces, c0 = [], 0
    for M in mats:
        if M.nrows != nrows:
            raise ValueError("hstack needs equal row counts")
        pieces.append((0, c0, M))
        c0 += M.ncols
    return _paste(fld, nrows, c0, pieces)


def vstack(mats: Sequence[KMatrix]) -> KMatrix:
    fld = mats[0].field
    ncols = mats[0].ncols
    pieces, r0 = [], 0
    for M in mats:
        if M.ncols != ncols:
            raise ValueError("vstack needs equal column counts")
        pieces.append((r0, 0, M))
        r0 += M.nrows
    return _paste(fld, r0, ncols, pieces)


def block_diag(mats: Sequence[KMatrix]) -> KMatrix:
    fld = mats[0].field
    pieces, r0, c0 = [], 0, 0
    for M in mats:
        pieces.append((r0, c0, M))
        r0 += M.nrows
        c0 += M.ncols
    return _paste(fld, r0, c0, pieces)


def vectorize(M: KMatrix) -> KMatrix:
    """Stack the entries of M (row-major) into one column."""
    coords = {}
    for i in range(M.nrows):
        for j in range(M.ncols):
            c = M.entry_coords(i, j)
            if any(x != 0 for x in c):
                coords[(i * M.ncols + j, 0)] = c
    return KMatrix.from_coords(M.field, M.nrows * M.ncols, 1, coords)


def unvectorize(v: KMatrix, nrows: int, ncols: int) -> KMatrix:
    coords = {}
    for k in range(v.nrows):
        c = v.entry_coords(k, 0)
        if any(x != 0 for x in c):
            coords[divmod(k, ncols)] = c
    return KMatrix.from_coords(v.field, nrows, ncols, coords)


def in_span(vectors: Sequence[KMatrix], target: KMatrix) -> bool:
    """Whether the column ``target`` lies in the K-span of the given columns."""
    if not vectors:
        return target.is_zero()
    return hstack(list(vectors)).solve(target) is not None


def span_rank(vectors: Sequence[KMatrix]) -> int:
    return hstack(list(vectors)).rank() if vectors else 0


def kron_identity_right(A: KMatrix, m: int) -> KMatrix:
    """A tensor I_m, with row-major vectorization of the second factor."""
    phi = A.field.degree
    Q = fmpq_mat(phi * A.nrows * m, phi * A.ncols * m)
    src = A.Q
    for a in range(src.nrows()):
        i, r = divmod(a, phi)
        for b in range(src.ncols()):
            x = src[a, b]
            if x == 0:
                continue
            j, s = divmod(b, phi)
            for c in range(m):
                Q[phi * (i * m + c) + r, phi * (j * m + c) + s] = x
    return KMatrix(A.field, A.nrows * m, A.ncols * m, Q)


def kron_identity_left(m: int, B: KMatrix) -> KMatrix:
    """I_m tensor B."""
    return block_diag([B] * m) if m else KMatrix.zeros(B.field, 0, 0)
