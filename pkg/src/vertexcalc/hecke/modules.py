"""Finite-dimensional modules over parabolic subalgebras H(S_mu) of H_q(S_n).

A module is given by the matrices of the generators T_i of H(S_mu) acting
on column vectors (left modules).  This file builds Specht and simple
modules, restricts and induces along Young subgroups, and computes Hom
spaces, radicals and characters.
"""
from __future__ import annotations

from typing import Sequence

from flint import fmpq, fmpq_mat

from ..cyclotomic import Cyclotomic, Scalar
from ..linalg import (
    KMatrix,
    hstack,
    kron_identity_left,
    kron_identity_right,
    unvectorize,
    vectorize,
    vstack,
)
from ..partitions import Partition, conjugate, syt_count
from .algebra import HeckeAlgebra, HElement
from .perms import (
    composition_blocks,
    composition_generators,
    compose,
    distinguished_reps,
    inverse,
    perm_table,
    simple_reflection,
    young_subgroup_elements,
)


class ConventionError(AssertionError):
    """A structural identity failed; this signals a convention mismatch."""


def _refines(fine: Sequence[int], coarse: Sequence[int]) -> bool:
    cuts_f, s = set(), 0
    for p in fine:
        s += p
        cuts_f.add(s)
    cuts_c, s = set(), 0
    for p in coarse:
        s += p
        cuts_c.add(s)
    return sum(fine) == sum(coarse) and cuts_c <= cuts_f


class HModule:
    """A left module over H(S_composition) inside H_q(S_n)."""

    def __init__(self, algebra: HeckeAlgebra, composition: Sequence[int], dim: int,
                 gens: dict[int, KMatrix], label: str = ""):
        self.algebra = algebra
        self.composition = tuple(composition)
        if sum(self.composition) != algebra.n:
            raise ValueError("composition must sum to n")
        self.dim = dim
        self.gens = dict(gens)
        self.label = label
        self._matrices: dict[int, KMatrix] = {}
        expected = set(composition_generators(self.composition))
        if set(self.gens) != expected:
            raise ValueError(f"generator set {sorted(self.gens)} does not match {sorted(expected)}")
        for A in self.gens.values():
            if A.shape != (dim, dim):
                raise ValueError("generator matrix has the wrong shape")

    def __repr__(self) -> str:
        return f"HModule({self.label or '?'}, dim={self.dim}, composition={self.composition})"

    @property
    def field(self):
        return self.algebra.field

    @property
    def is_full(self) -> bool:
        return self.composition == (self.algebra.n,)

    def identity(self) -> KMatrix:
        return KMatrix.identity(self.field, self.dim)

    def matrix_of(self, w: int) -> KMatrix:
        """Action of T_w for w (a permutation index) in the Young subgroup."""
        if w not in self._matrices:
            t = self.algebra.table
            if w == 0:
                self._matrices[0] = self.identity()
            else:
                i, j = t.parent[w]
                if i not in self.gens:
                    raise ValueError("permutation lies outside the Young subgroup")
                self._matrices[w] = self.gens[i] @ self.matrix_of(j)
        return self._matrices[w]

    def act(self, h: HElement) -> KMatrix:
        """Action of an algebra element supported on the Young subgroup."""
        total = KMatrix.zeros(self.field, self.dim, self.dim)
        for w, c in h.terms.items():
            total = total + self.matrix_of(w).scale(c)
        return total

    def check_relations(self) -> None:
        q = self.algebra.q
        I = self.identity()
        gens = sorted(self.gens)
        for i in gens:
            A = self.gens[i]
            if not ((A - I.scale(q)) @ (A + I)).is_zero():
                raise ConventionError(f"quadratic relation fails for T_{i}")
        for i in gens:
            for j in gens:
                if j <= i:
                    continue
                A, B = self.gens[i], self.gens[j]
                if j == i + 1:
                    if A @ B @ A != B @ A @ B:
                        raise ConventionError(f"braid relation fails for T_{i}, T_{j}")
                elif A @ B != B @ A:
                    raise ConventionError(f"T_{i} and T_{j} fail to commute")

    def character(self) -> dict[int, Cyclotomic]:
        """Trace of T_w for every w of the Young subgroup, keyed by permutation index."""
        return {w: self.matrix_of(w).trace() for w in young_subgroup_elements(self.composition)}

    def is_module_map_from(self, source: "HModule", f: KMatrix) -> bool:
        """Whether f: source -> self commutes with every generator."""
        return all(self.gens[i] @ f == f @ source.gens[i] for i in self.gens)


# -- basic modules ----------------------------------------------------------

def regular_module(H: HeckeAlgebra) -> HModule:
    return HModule(H, (H.n,), H.dim, {i: H.left_matrix(i) for i in range(1, H.n)}, label="H")


def one_dim_module(H: HeckeAlgebra, composition: Sequence[int], kinds: Sequence[str]) -> HModule:
    """1-dimensional H(S_composition)-module; per block T_i acts by q ('q') or -1 ('-1')."""
    composition = tuple(composition)
    if len(kinds) != len(composition):
        raise ValueError("one kind per block")
    gens = {}
    for blk, kind in zip(composition_blocks(composition), kinds):
        val = {"q": H.q, "-1": H.field(-1)}[kind]
        for k in range(blk.start + 1, blk.stop):
            gens[k] = KMatrix.from_rows(H.field, [[val]])
    return HModule(H, composition, 1, gens, label="x".join(kinds))


def one_dim_seeds(H: HeckeAlgebra, composition: Sequence[int]) -> list[HModule]:
    """All 1-dimensional modules of H(S_composition) (two choices per block of size >= 2)."""
    from itertools import product

    choices = [("q", "-1") if p >= 2 else ("q",) for p in composition]
    return [one_dim_module(H, composition, ks) for ks in product(*choices)]


def submodule(M: HModule, basis: KMatrix, label: str = "") -> HModule:
    """The submodule spanned by the (independent) columns of ``basis``."""
    gens = {}
    for i, A in M.gens.items():
        X = basis.solve(A @ basis)
        if X is None:
            raise ConventionError("subspace is not stable under the action")
        gens[i] = X
    return HModule(M.algebra, M.composition, basis.ncols, gens, label)


def _complement_columns(sub: KMatrix, dim: int) -> list[int]:
    """Standard basis vectors completing the columns of ``sub`` to a basis."""
    fld = sub.field
    cols = [sub] if sub.ncols else []
    chosen = []
    rank = sub.ncols
    for k in range(dim):
        e = KMatrix.from_entries(fld, dim, 1, {(k, 0): 1})
        trial = hstack(cols + [e])
        if trial.rank() > rank:
            cols.append(e)
            chosen.append(k)
            rank += 1
        if rank == dim:
            break
    return chosen


def quotient(M: HModule, sub: KMatrix, label: str = "") -> tuple[HModule, KMatrix]:
    """M / span(sub) with the projection matrix M -> quotient."""
    fld = M.field
    comp = _complement_columns(sub, M.dim)
    C = KMatrix.from_entries(fld, M.dim, len(comp), {(k, a): 1 for a, k in enumerate(comp)})
    basis = hstack([C, sub]) if sub.ncols else C
    P_full = basis.inverse()  # coordinates in (complement, sub)
    proj = P_full.submatrix(range(len(comp)), range(M.dim))
    gens = {i: proj @ A @ C for i, A in M.gens.items()}
    return HModule(M.algebra, M.composition, len(comp), gens, label), proj


# -- restriction and induction ------------------------------------------------

def restrict_module(M: HModule, composition: Sequence[int]) -> HModule:
    """Restrict to H(S_composition) for a refinement of M's composition."""
    composition = tuple(composition)
    if not _refines(composition, M.composition):
        raise ValueError(f"{composition} does not refine {M.composition}")
    keep = set(composition_generators(composition))
    res = HModule(M.algebra, composition, M.dim, {i: A for i, A in M.gens.items() if i in keep},
                  label=f"Res{composition}({M.label})")
    for w, A in M._matrices.items():
        if w in young_subgroup_elements(composition):
            res._matrices[w] = A
    return res


class InducedModule(HModule):
    """Ind from H(S_source) to H(S_target) with basis T_d (x) m, d distinguished."""

    def __init__(self, M: HModule, target: Sequence[int]):
        H = M.algebra
        target = tuple(target)
        if not _refines(M.composition, target):
            raise ValueError(f"{M.composition} does not refine {target}")
        t = H.table
        reps = distinguished_reps(M.composition, target)
        pos = {d: a for a, d in enumerate(reps)}
        m = M.dim
        phi = H.field.degree
        size = len(reps) * m
        qI = KMatrix.identity(H.field, m).scale(H.q).Q
        qm1I = KMatrix.identity(H.field, m).scale(H.q - 1).Q
        oneI = KMatrix.identity(H.field, m).Q
        gens = {}
        for i in composition_generators(target):
            Q = fmpq_mat(phi * size, phi * size)
            for d in reps:
                sd = t.left[i][d]
                col = pos[d]
                if t.lengths[sd] > t.lengths[d]:
                    if sd in pos:
                        _paste_block(Q, pos[sd], col, oneI, phi * m)
                    else:
                        # s_i d = d s_j with s_j in the source Young subgroup
                        dp = t.perms[d]
                        a, b = inverse(dp)[i - 1], inverse(dp)[i]
                        j = max(a, b)
                        if abs(a - b) != 1 or j not in M.gens:
                            raise ConventionError("coset factorisation failed")
                        _paste_block(Q, col, col, M.gens[j].Q, phi * m)
                else:
                    _paste_block(Q, pos[sd], col, qI, phi * m)
                    _paste_block(Q, col, col, qm1I, phi * m)
            gens[i] = KMatrix(H.field, size, size, Q)
        super().__init__(H, target, size, gens, label=f"Ind{target}({M.label})")
        self.source = M
        self.reps = reps


def _paste_block(Q: fmpq_mat, bi: int, bj: int, block: fmpq_mat, bs: int) -> None:
    """Add ``block`` (a bs x bs rational matrix) into block position (bi, bj)."""
    r0, c0 = bi * bs, bj * bs
    for r in range(block.nrows()):
        for c in range(block.ncols()):
            x = block[r, c]
            if x != 0:
                Q[r0 + r, c0 + c] = Q[r0 + r, c0 + c] + x


def induce_module(M: HModule, target: Sequence[int] | None = None) -> InducedModule:
    return InducedModule(M, (M.algebra.n,) if target is None else target)


def induce_morphism(f: KMatrix, source_dim_in: int, reps_count: int) -> KMatrix:
    """Ind of an H(S_mu)-map: the block-diagonal copy over coset representatives."""
    from ..linalg import block_diag

    return block_diag([f] * reps_count)


def conjugate_module(M: HModule, u: Sequence[int], target: Sequence[int]) -> HModule:
    """The module T_u-conjugate: s_{u(k)} acts on the new module as s_k acts on M.

    Requires u s_k u^-1 to be a simple reflection for every generator s_k of
    M's Young subgroup, with image the generators of ``target``.
    """
    H = M.algebra
    n = H.n
    gens = {}
    for k, A in M.gens.items():
        s = compose(compose(tuple(u), simple_reflection(n, k)), inverse(tuple(u)))
        moved = [p for p in range(n) if s[p] != p]
        if len(moved) != 2 or moved[1] != moved[0] + 1:
            raise ConventionError("conjugation does not map simple reflections to simple reflections")
        gens[moved[1]] = A
    return HModule(H, target, M.dim, gens, label=f"conj({M.label})")


# -- Hom spaces ---------------------------------------------------------------

def hom_space(M: HModule, N: HModule) -> list[KMatrix]:
    """A basis of Hom(M, N) as N.dim x M.dim matrices."""
    if M.composition != N.composition or M.algebra is not N.algebra:
        raise ValueError("Hom needs modules over the same algebra")
    fld = M.field
    m, n = M.dim, N.dim
    if m == 0 or n == 0:
        return []
    eqs = []
    for i in sorted(M.gens):
        # vec(A_N X - X A_M) with row-major vec(X)
        eqs.append(kron_identity_right(N.gens[i], m) - kron_identity_left(n, M.gens[i].transpose()))
    if not eqs:
        return [unvectorize(KMatrix.from_entries(fld, n * m, 1, {(k, 0): 1}), n, m) for k in range(n * m)]
    K = vstack(eqs).kernel()
    return [unvectorize(c, n, m) for c in K.columns()]


def endomorphisms(M: HModule) -> list[KMatrix]:
    return hom_space(M, M)


def matrix_algebra_radical(basis: Sequence[KMatrix]) -> list[KMatrix]:
    """Radical of a matrix algebra (given by a basis) via the trace form tr(ab).

    In characteristic zero the kernel of this form on a subalgebra of a
    full matrix algebra is its Jacobson radical.
    """
    if not basis:
        return []
    fld = basis[0].field
    d = len(basis)
    G = KMatrix.from_entries(fld, d, d, {
        (a, b): (basis[a] @ basis[b]).trace() for a in range(d) for b in range(d)
    })
    K = G.kernel()
    out = []
    for c in K.columns():
        X = KMatrix.zeros(fld, basis[0].nrows, basis[0].ncols)
        for a in range(d):
            coeff = c.entry(a, 0)
            if coeff:
                X = X + basis[a].scale(coeff)
        out.append(X)
    return out


def end_semisimple_dimension(M: HModule) -> int:
    """dim End(M) - dim rad End(M); equal to 1 certifies indecomposability over K."""
    E = endomorphisms(M)
    return len(E) - len(matrix_algebra_radical(E))


# -- Specht and simple modules -------------------------------------------------

def row_to_column_permutation(lam: Sequence[int]) -> tuple[int, ...]:
    """w_lam: sends the entry of the column-reading tableau to the row-reading entry in the same cell.

    With this choice w S_{lam'} w^-1 is the column stabiliser of the row-reading tableau.
    """
    lam = Partition(lam)
    row_entry, col_entry = {}, {}
    k = 0
    for i, r in enumerate(lam):
        for j in range(r):
            row_entry[(i, j)] = k
            k += 1
    k = 0
    conj = conjugate(lam)
    for j, c in enumerate(conj):
        for i in range(c):
            col_entry[(i, j)] = k
            k += 1
    w = [0] * lam.size
    for cell, a in col_entry.items():
        w[a] = row_entry[cell]
    return tuple(w)


def specht_generator(H: HeckeAlgebra, lam: Sequence[int]) -> HElement:
    """z = x_lam T_{w_lam} y_{lam'}."""
    lam = Partition(lam)
    x = H.young_sum(tuple(lam))
    y = H.young_alternating_sum(tuple(conjugate(lam)))
    Tw = H.basis_element(row_to_column_permutation(lam))
    return x * (Tw * y)


def spin(H: HeckeAlgebra, seeds: Sequence[HElement]) -> KMatrix:
    """Basis (as columns) of the left ideal generated by the seeds."""
    fld = H.field
    cols: list[KMatrix] = []
    rank = 0
    queue = [H.to_vector(s) for s in seeds]
    while queue:
        v = queue.pop(0)
        trial = hstack(cols + [v]) if cols else v
        r = trial.rank()
        if r == rank:
            continue
        cols.append(v)
        rank = r
        for i in range(1, H.n):
            queue.append(H.left_matrix(i) @ v)
    return hstack(cols) if cols else KMatrix.zeros(fld, H.dim, 0)


class SpechtModule(HModule):
    """The left ideal H z_lam with its basis recorded as vectors in H."""

    def __init__(self, H: HeckeAlgebra, lam: Sequence[int]):
        lam = Partition(lam)
        if lam.size != H.n:
            raise ValueError("partition size must equal n")
        z = specht_generator(H, lam)
        B = spin(H, [z])
        if B.ncols != syt_count(lam):
            raise ConventionError(f"Specht module for {lam} has dimension {B.ncols}, expected {syt_count(lam)}")
        gens = {}
        for i in range(1, H.n):
            X = B.solve(H.left_matrix(i) @ B)
            if X is None:
                raise ConventionError("spun space is not a left ideal")
            gens[i] = X
        super().__init__(H, (H.n,), B.ncols, gens, label=f"S{lam}")
        self.partition = lam
        self.basis_vectors = B
        self.generator_element = z

    def basis_elements(self) -> list[HElement]:
        return [self.algebra.from_vector(c) for c in self.basis_vectors.columns()]


def permutation_form_gram(S: SpechtModule) -> KMatrix:
    """Gram matrix of the contravariant form inherited from H y_{lam'}.

    H y_{lam'} has basis T_d y_{lam'} (d distinguished for S_{lam'}), and the
    coordinate on T_d y equals the coefficient of T_d.  The form pairs
    T_d y with T_d' y to q^l(d) if d = d' and 0 otherwise.
    """
    H = S.algebra
    comp = tuple(conjugate(S.partition))
    reps = distinguished_reps(comp)
    elems = S.basis_elements()
    d = S.dim
    qp = {r: H.q ** H.table.lengths[r] for r in reps}
    entries = {}
    for a in range(d):
        for b in range(a, d):
            val = H.field.zero
            for r in reps:
                ca, cb = elems[a].coefficient(r), elems[b].coefficient(r)
                if ca and cb:
                    val = val + ca * cb * qp[r]
            entries[(a, b)] = entries[(b, a)] = val
    return KMatrix.from_entries(H.field, d, d, entries)


def tau_form_gram(S: SpechtModule) -> KMatrix:
    """Gram matrix of tau(a* b) on the left ideal (reported for comparison only)."""
    H = S.algebra
    elems = S.basis_elements()
    d = S.dim
    entries = {}
    for a in range(d):
        for b in range(a, d):
            val = H.field.zero
            for w, ca in elems[a].terms.items():
                cb = elems[b].coefficient(w)
                if cb:
                    val = val + ca * cb * H.q ** H.table.lengths[w]
            entries[(a, b)] = entries[(b, a)] = val
    return KMatrix.from_entries(H.field, d, d, entries)


def check_contravariant(M: HModule, G: KMatrix) -> bool:
    """f(T_i a, b) = f(a, T_i b) for every generator."""
    return all(A.transpose() @ G == G @ A for A in M.gens.values())


def contravariant_radical(S: SpechtModule, form: str = "permutation") -> tuple[int, HModule | None]:
    """Rank of the contravariant form and the quotient S / rad when nonzero."""
    G = permutation_form_gram(S) if form == "permutation" else tau_form_gram(S)
    if not check_contravariant(S, G):
        raise ConventionError(f"form on {S.label} is not contravariant")
    rank = G.rank()
    if rank == 0:
        return 0, None
    rad = G.kernel()
    D, _ = quotient(S, rad, label=f"D{S.partition}")
    return rank, D


def algebra_radical(H: HeckeAlgebra) -> list[HElement]:
    """Basis of rad(H) as the kernel of left multiplication by the central norm element.

    The regular trace form is Tr(L_ab) = tau(a b N) with N the sum of
    q^(-l(w)) T_w T_{w^-1}, so its kernel is {b : N b = 0}.
    """
    N = H.norm_element((1,) * H.n)
    R = regular_module(H)
    LN = R.act(N)
    return [H.from_vector(c) for c in LN.kernel().columns()]


def algebra_radical_trace_form(H: HeckeAlgebra) -> int:
    """Dimension of the kernel of (a, b) -> Tr(L_a L_b) on the standard basis (independent route)."""
    R = regular_module(H)
    mats = [R.matrix_of(w) for w in range(H.dim)]
    # Tr(L_a L_b) is linear in b; precompute transposes once
    d = H.dim
    entries = {}
    for a in range(d):
        for b in range(a, d):
            entries[(a, b)] = entries[(b, a)] = (mats[a] @ mats[b]).trace()
    G = KMatrix.from_entries(H.field, d, d, entries)
    return d - G.rank()


def radical_of_module(M: HModule, rad_basis: Sequence[HElement]) -> KMatrix:
    """Columns spanning rad(H) M."""
    vecs = []
    for h in rad_basis:
        A = M.act(h)
        if not A.is_zero():
            vecs.append(A)
    if not vecs:
        return KMatrix.zeros(M.field, M.dim, 0)
    big = hstack(vecs)
    # column basis of the image
    cols = []
    rank = 0
    for c in big.columns():
        trial = hstack(cols + [c]) if cols else c
        r = trial.rank()
        if r > rank:
            cols.append(c)
            rank = r
        if rank == M.dim:
            break
    return hstack(cols) if cols else KMatrix.zeros(M.field, M.dim, 0)
