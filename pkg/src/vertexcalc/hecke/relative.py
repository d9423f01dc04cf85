"""Adjunction data for Ind/Res along Young subgroups and vertex computations.

For a composition mu, H is free over H(S_mu) on the distinguished
representatives T_d, and the pairs (T_d, q^(-l(d)) T_{d^-1}) are dual
bases for the symmetrising forms.  This gives

* the counit  eps: Ind Res M -> M,        T_d (x) m  ->  T_d m,
* the unit    eta: M -> Ind Res M,        m  ->  sum_d T_d (x) q^(-l(d)) T_{d^-1} m,
* the unit    alpha: X -> Res Ind X,      x  ->  1 (x) x,
* the counit  beta: Res Ind X -> X,       T_d (x) x  ->  [d = 1] x,

and the composite zeta = eps o eta is left multiplication by the norm
element.  M is a direct summand of Ind Res M exactly when the identity of M
is a relative trace sum_d q^(-l(d)) T_d b T_{d^-1} of some H(S_mu)-endomorphism b.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ..blocks import ParabolicType, parabolic_contains, parabolic_types
from ..cyclotomic import Cyclotomic
from ..linalg import KMatrix, block_diag, hstack, in_span, vectorize, vstack
from .algebra import HeckeAlgebra
from .modules import (
    ConventionError,
    HModule,
    InducedModule,
    end_semisimple_dimension,
    hom_space,
    induce_module,
    restrict_module,
)
from .perms import distinguished_reps


class NotCertifiedError(ValueError):
    """Indecomposability could not be certified (End/rad End has dimension > 1)."""


class VertexUniquenessError(AssertionError):
    """Minimal relative-projectivity types are not unique up to conjugacy."""


def _reps(M: HModule, composition: Sequence[int]) -> tuple[int, ...]:
    return distinguished_reps(tuple(composition), (M.algebra.n,))


def counit(M: HModule, composition: Sequence[int]) -> KMatrix:
    """eps_M: Ind Res M -> M."""
    return hstack([M.matrix_of(d) for d in _reps(M, composition)])


def unit(M: HModule, composition: Sequence[int]) -> KMatrix:
    """eta_M: M -> Ind Res M."""
    H = M.algebra
    t = H.table
    return vstack([
        M.matrix_of(t.inv[d]).scale(H.q_inv ** t.lengths[d]) for d in _reps(M, composition)
    ])


def unit_ind_res(X: HModule) -> KMatrix:
    """alpha_X: X -> Res Ind X, x -> 1 (x) x."""
    reps = distinguished_reps(X.composition, (X.algebra.n,))
    blocks = [X.identity() if d == 0 else KMatrix.zeros(X.field, X.dim, X.dim) for d in reps]
    return vstack(blocks)


def counit_res_ind(X: HModule) -> KMatrix:
    """beta_X: Res Ind X -> X, projection onto the d = 1 summand."""
    reps = distinguished_reps(X.composition, (X.algebra.n,))
    blocks = [X.identity() if d == 0 else KMatrix.zeros(X.field, X.dim, X.dim) for d in reps]
    return hstack(blocks)


def ind_of_map(f: KMatrix, composition: Sequence[int], n: int) -> KMatrix:
    """Ind of an H(S_mu)-map: one copy of f per coset representative."""
    return block_diag([f] * len(distinguished_reps(tuple(composition), (n,))))


def relative_trace(M: HModule, composition: Sequence[int], b: KMatrix) -> KMatrix:
    """sum_d q^(-l(d)) T_d b T_{d^-1}, an H-endomorphism when b is H(S_mu)-linear."""
    H = M.algebra
    t = H.table
    total = KMatrix.zeros(M.field, M.dim, M.dim)
    for d in _reps(M, composition):
        total = total + (M.matrix_of(d) @ b @ M.matrix_of(t.inv[d])).scale(H.q_inv ** t.lengths[d])
    return total


@dataclass
class AdjunctionData:
    module: HModule
    composition: tuple[int, ...]
    induced: InducedModule
    eta: KMatrix
    eps: KMatrix
    zeta: KMatrix
    norm_action: KMatrix
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def adjunction_data(M: HModule, composition: Sequence[int], full_triangles: bool = True) -> AdjunctionData:
    """Unit, counit, zeta and the triangle identities for (M, mu).

    ``full_triangles`` also checks the two identities that live on
    Ind Res Ind, whose dimension grows with the square of the index.
    """
    if not M.is_full:
        raise ValueError("adjunction data needs an H(S_n)-module")
    composition = tuple(composition)
    H = M.algebra
    R = restrict_module(M, composition)
    N = induce_module(R)
    eta, eps = unit(M, composition), counit(M, composition)
    zeta = eps @ eta
    norm = M.act(H.norm_element(composition))
    checks = {
        "eta_is_module_map": N.is_module_map_from(M, eta),
        "eps_is_module_map": M.is_module_map_from(N, eps),
        "zeta_is_norm_element": zeta == norm,
        # Res eps o alpha_{Res M} = id and beta_{Res M} o Res eta = id
        "triangle_res_ind_unit": eps @ unit_ind_res(R) == R.identity(),
        "triangle_res_eta": counit_res_ind(R) @ eta == R.identity(),
    }
    if full_triangles:
        # eps_{Ind X} o Ind(alpha_X) = id and Ind(beta_X) o eta_{Ind X} = id, X = Res M
        checks["triangle_ind_eps"] = (
            counit(N, composition) @ ind_of_map(unit_ind_res(R), composition, H.n) == N.identity()
        )
        checks["triangle_ind_eta"] = (
            ind_of_map(counit_res_ind(R), composition, H.n) @ unit(N, composition) == N.identity()
        )
    return AdjunctionData(M, composition, N, eta, eps, zeta, norm, checks)


def zeta_is_natural(f: KMatrix, M: HModule, Mp: HModule, composition: Sequence[int]) -> bool:
    """zeta_{M'} o f = f o zeta_{M} for an H-map f: M -> M'."""
    H = M.algebra
    N = H.norm_element(tuple(composition))
    return Mp.act(N) @ f == f @ M.act(N)


# -- summands ----------------------------------------------------------------

def trace_ideal_contains_identity(M: HModule, N: HModule) -> bool:
    """Whether id_M lies in the span of all composites M -> N -> M."""
    into = hom_space(M, N)
    back = hom_space(N, M)
    if not into or not back:
        return False
    target = vectorize(M.identity())
    vecs = []
    for p in back:
        for i in into:
            vecs.append(vectorize(p @ i))
    return in_span(vecs, target)


def certify_indecomposable(M: HModule) -> None:
    k = end_semisimple_dimension(M)
    if k != 1:
        raise NotCertifiedError(f"indecomposability not certified for {M.label}: dim End/rad = {k}")


def is_summand(M: HModule, N: HModule, certified: bool = False) -> bool:
    """M | N for indecomposable M, via the trace ideal of N in End(M)."""
    if not certified:
        certify_indecomposable(M)
    return trace_ideal_contains_identity(M, N)


def unit_has_left_inverse(M: HModule, composition: Sequence[int]) -> bool:
    """Some H-map s: Ind Res M -> M with s o eta = id."""
    N = induce_module(restrict_module(M, composition))
    eta = unit(M, composition)
    vecs = [vectorize(s @ eta) for s in hom_space(N, M)]
    return in_span(vecs, vectorize(M.identity()))


def counit_has_right_inverse(M: HModule, composition: Sequence[int]) -> bool:
    """Some H-map s: M -> Ind Res M with eps o s = id."""
    N = induce_module(restrict_module(M, composition))
    eps = counit(M, composition)
    vecs = [vectorize(eps @ s) for s in hom_space(M, N)]
    return in_span(vecs, vectorize(M.identity()))


def is_relatively_projective(M: HModule, composition: Sequence[int]) -> bool:
    """Identity of M in the image of the relative trace from H(S_mu)-endomorphisms."""
    R = restrict_module(M, composition)
    ends = hom_space(R, R)
    target = vectorize(M.identity())
    return in_span([vectorize(relative_trace(M, composition, b)) for b in ends], target)


# -- vertices ----------------------------------------------------------------

@dataclass
class VertexResult:
    vertex: ParabolicType
    tested: list[tuple[ParabolicType, bool]]

    def to_json(self) -> dict:
        return {
            "vertex": self.vertex.to_json(),
            "tested_parabolics": [{"type": t.to_json(), "summand": s} for t, s in self.tested],
        }


def vertex_of(M: HModule, certified: bool = False) -> VertexResult:
    """The minimal parabolic type P with M | Ind_P Res_P M, unique up to conjugacy."""
    if not M.is_full:
        raise ValueError("vertices are computed for H(S_n)-modules")
    if not certified:
        certify_indecomposable(M)
    n = M.algebra.n
    tested = []
    for P in parabolic_types(n):
        tested.append((P, is_relatively_projective(M, P.composition(n))))
    hits = [P for P, s in tested if s]
    if not hits:
        raise ConventionError(f"{M.label} is not even a summand of Ind from the whole group")
    minimal = [P for P in hits if not any(Q != P and parabolic_contains(P, Q, n) for Q in hits)]
    if len(minimal) != 1:
        raise VertexUniquenessError(f"non-unique minimal types for {M.label}: {[str(P) for P in minimal]}")
    # every type containing the vertex must also be a hit
    for P, s in tested:
        if parabolic_contains(P, minimal[0], n) and not s:
            raise ConventionError(f"relative projectivity is not upward closed at {P}")
    return VertexResult(minimal[0], tested)


# -- Mackey at module level ---------------------------------------------------

def double_coset_representative(table: Sequence[Sequence[int]], nu: Sequence[int], mu: Sequence[int]) -> tuple[int, ...]:
    """Minimal representative u of the double coset S_nu u S_mu with the given table.

    u sends the entries of the j-th block of mu, in increasing order, to
    a_1j slots of the first block of nu, then a_2j slots of the second, and
    so on; within each nu block the slots are filled column by column.
    """
    nu_start = [sum(nu[:i]) for i in range(len(nu))]
    # slot offsets inside each nu block, column by column
    offset = {}
    for i in range(len(nu)):
        s = 0
        for j in range(len(mu)):
            offset[(i, j)] = s
            s += table[i][j]
    u = []
    for j in range(len(mu)):
        for i in range(len(nu)):
            for k in range(table[i][j]):
                u.append(nu_start[i] + offset[(i, j)] + k)
    return tuple(u)


def mackey_module_check(nu: Sequence[int], mu: Sequence[int], M: HModule) -> tuple[bool, dict, dict]:
    """Characters of Res_nu Ind_mu M and of the double-coset sum agree on H(S_nu)."""
    from ..kgroup import double_cosets
    from .modules import conjugate_module

    nu, mu = tuple(nu), tuple(mu)
    if M.composition != mu:
        raise ValueError("M must be a module for the composition mu")
    lhs_mod = restrict_module(induce_module(M), nu)
    lhs = lhs_mod.character()
    rhs: dict[int, Cyclotomic] = {w: M.field.zero for w in lhs}
    for dc in double_cosets(nu, mu):
        A = dc.table
        fine = tuple(A[i][j] for j in range(len(mu)) for i in range(len(nu)) if A[i][j])
        row_comp = tuple(A[i][j] for i in range(len(nu)) for j in range(len(mu)) if A[i][j])
        u = double_coset_representative(A, nu, mu)
        piece = conjugate_module(restrict_module(M, fine), u, row_comp)
        ind = induce_module(piece, nu)
        for w, c in ind.character().items():
            rhs[w] = rhs[w] + c
    return lhs == rhs, lhs, rhs
