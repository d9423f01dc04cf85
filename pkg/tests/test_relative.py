import pytest

from vertexcalc.blocks import ParabolicType, block_of, predicted_vertex_of_block
from vertexcalc.hecke.characters import algebra, projective_cover, simple_modules, specht_modules
from vertexcalc.hecke.relative import (
    NotCertifiedError,
    adjunction_data,
    counit_has_right_inverse,
    double_coset_representative,
    is_relatively_projective,
    is_summand,
    mackey_module_check,
    relative_trace,
    trace_ideal_contains_identity,
    unit_has_left_inverse,
    vertex_of,
    zeta_is_natural,
)
from vertexcalc.hecke.modules import (
    HModule,
    hom_space,
    induce_module,
    one_dim_module,
    one_dim_seeds,
    regular_module,
    restrict_module,
)
from vertexcalc.hecke.perms import length
from vertexcalc.kgroup import double_cosets
from vertexcalc.linalg import block_diag
from vertexcalc.partitions import Partition, compositions

P = Partition


def poincare(H):
    total = H.field.zero
    for k in range(H.dim):
        total = total + H.q ** H.table.lengths[k]
    return total


def direct_sum(M, N):
    return HModule(M.algebra, M.composition, M.dim + N.dim,
                   {i: block_diag([M.gens[i], N.gens[i]]) for i in M.gens}, label="sum")


# -- adjunction data ---------------------------------------------------------------------

def test_norm_element_rank_one():
    H = algebra(2, 2)
    N = H.norm_element((1, 1))
    assert N == (H.one().scaled(2) + H.generator(1).scaled(2))
    D = simple_modules(2, 2)[P((1, 1))]
    assert D.act(N).is_zero()
    assert H.norm_element((2,)) == H.one()


@pytest.mark.parametrize("n,e", [(2, 2), (3, 2), (3, 3), (3, 4)])
def test_zeta_on_index_representation_is_poincare_polynomial(n, e):
    H = algebra(n, e)
    S = specht_modules(n, e)[P((n,))]
    ad = adjunction_data(S, (1,) * n)
    assert ad.zeta[0, 0] == poincare(H)
    assert (poincare(H).is_zero()) == (e <= n)


@pytest.mark.parametrize("n,e", [(2, 2), (3, 2), (3, 3), (4, 2), (4, 3)])
def test_triangle_identities_and_naturality(n, e):
    mods = list(specht_modules(n, e).values()) + list(simple_modules(n, e).values())
    for comp in compositions(n):
        for M in mods:
            ad = adjunction_data(M, comp, full_triangles=n <= 3)
            assert ad.ok, (M.label, comp, ad.checks)
        for M in mods[:3]:
            for Mp in mods[:3]:
                for f in hom_space(M, Mp):
                    assert zeta_is_natural(f, M, Mp, comp)


def test_whole_group_adjunction_is_trivial():
    S = specht_modules(3, 2)[P((2, 1))]
    ad = adjunction_data(S, (3,))
    assert ad.eta == S.identity() and ad.eps == S.identity() and ad.zeta == S.identity()


def test_relative_trace_of_identity_is_zeta():
    for n, e in [(3, 2), (4, 3)]:
        H = algebra(n, e)
        for M in simple_modules(n, e).values():
            for comp in compositions(n):
                assert relative_trace(M, comp, M.identity()) == M.act(H.norm_element(comp))


# -- summands --------------------------------------------------------------------------

def test_summand_examples():
    H = algebra(2, 2)
    D = simple_modules(2, 2)[P((1, 1))]
    R = regular_module(H)
    assert trace_ideal_contains_identity(D, D)
    assert not is_summand(D, R)
    assert not is_summand(D, induce_module(restrict_module(D, (1, 1))))
    triv = one_dim_module(H, (1, 1), ["q", "q"])
    assert is_summand(R, induce_module(triv))
    H3 = algebra(3, 3)
    D3 = simple_modules(3, 3)[P((1, 1, 1))]
    assert not is_summand(D3, induce_module(restrict_module(D3, (2, 1))))


def test_decomposable_modules_are_not_certified():
    D = simple_modules(3, 2)[P((2, 1))]
    with pytest.raises(NotCertifiedError):
        is_summand(direct_sum(D, D), D)
    with pytest.raises(NotCertifiedError):
        vertex_of(regular_module(algebra(3, 3)))


@pytest.mark.parametrize("n,e", [(2, 2), (3, 2), (3, 3), (4, 2), (4, 3)])
def test_four_summand_criteria_agree(n, e):
    mods = list(simple_modules(n, e).values())
    mods += [projective_cover(n, e, mu) for mu in simple_modules(n, e)]
    for M in mods:
        for comp in compositions(n):
            N = induce_module(restrict_module(M, comp))
            answers = {
                is_relatively_projective(M, comp),
                is_summand(M, N),
                unit_has_left_inverse(M, comp),
                counit_has_right_inverse(M, comp),
            }
            assert len(answers) == 1, (M.label, comp)


def test_nonzero_scalar_zeta_decides_when_restriction_is_absolutely_simple():
    for n, e in [(3, 2), (3, 3), (4, 3)]:
        H = algebra(n, e)
        for M in simple_modules(n, e).values():
            for comp in compositions(n):
                R = restrict_module(M, comp)
                if len(hom_space(R, R)) != 1:
                    continue
                Z = M.act(H.norm_element(comp))
                scalar = Z[0, 0]
                is_nonzero_scalar = (not scalar.is_zero()) and Z == M.identity().scale(scalar)
                assert is_nonzero_scalar == is_relatively_projective(M, comp)


# -- vertices --------------------------------------------------------------------------

def test_vertex_examples():
    D = simple_modules(2, 2)[P((1, 1))]
    res = vertex_of(D)
    assert res.vertex == ParabolicType((2,))
    assert res.to_json() == {"vertex": [2], "tested_parabolics": [
        {"type": [2], "summand": True}, {"type": [], "summand": False}]}
    assert vertex_of(regular_module(algebra(2, 2))).vertex == ParabolicType()
    for mu in [(2, 1), (1, 1, 1)]:
        assert vertex_of(simple_modules(3, 3)[P(mu)]).vertex == ParabolicType((3,))
    for mu in simple_modules(3, 4):
        assert vertex_of(simple_modules(3, 4)[mu]).vertex == ParabolicType()


@pytest.mark.parametrize("n,e", [(2, 2), (3, 2), (3, 3), (4, 2), (4, 3), (4, 4), (5, 5)])
def test_vertices_of_simples_are_block_predictions(n, e):
    for mu, D in simple_modules(n, e).items():
        assert vertex_of(D, certified=True).vertex == predicted_vertex_of_block(block_of(mu, e))


@pytest.mark.parametrize("n,e", [(3, 2), (4, 2), (4, 3)])
def test_projective_covers_have_trivial_vertex(n, e):
    for mu in simple_modules(n, e):
        Pm = projective_cover(n, e, mu)
        assert vertex_of(Pm).vertex == ParabolicType()


# -- Mackey at module level --------------------------------------------------------------

def test_double_coset_representatives_are_minimal():
    for n in range(1, 5):
        for nu in compositions(n):
            for mu in compositions(n):
                lengths = []
                for dc in double_cosets(nu, mu):
                    u = double_coset_representative(dc.table, nu, mu)
                    assert sorted(u) == list(range(n))
                    lengths.append(length(u))
                assert lengths.count(0) == 1


def test_mackey_module_example():
    H = algebra(3, 3)
    X = one_dim_module(H, (2, 1), ["q", "q"])
    ok, lhs, rhs = mackey_module_check((2, 1), (2, 1), X)
    assert ok
    assert lhs[0] == H.field(3)
    ok, _, _ = mackey_module_check((3,), (2, 1), X)
    assert ok


@pytest.mark.parametrize("e", [2, 3])
def test_mackey_modules_exhaustive(e):
    for n in range(1, 5):
        H = algebra(n, e)
        for mu in compositions(n):
            for X in one_dim_seeds(H, mu):
                for nu in compositions(n):
                    assert mackey_module_check(nu, mu, X)[0], (nu, mu, X.label)
