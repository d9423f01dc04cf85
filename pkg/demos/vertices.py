"""
Vertices of Hecke algebra modules
=================================

A vertex of an indecomposable module M is a minimal parabolic subgroup W'
such that M is a direct summand of a module induced from H(W').  The scan
tests every parabolic type with the relative-trace criterion.  That asks
whether the identity of M lies in the image of the relative trace
b -> sum_d q^{-l(d)} T_d b T_{d^-1}, taken over H(W')-endomorphisms b.
"""
from vertexcalc import Partition, block_of, predicted_vertex_of_block
from vertexcalc.hecke.characters import algebra, projective_cover, simple_modules
from vertexcalc.hecke.relative import adjunction_data, vertex_of
from vertexcalc.hecke.modules import HModule, algebra_radical, induce_module, regular_module

###############################################################################
# The smallest case, n = 2 and e = 2, where q = -1.  The radical of H is
# spanned by 1 + T, the simple D(1,1) has vertex S_2, and H is projective.

H = algebra(2, 2)
print("radical of H_q(S_2) at e=2:", algebra_radical(H))
D11 = simple_modules(2, 2)[Partition((1, 1))]
print("vertex of D(1,1):", vertex_of(D11).vertex)
print("vertex of H:", vertex_of(regular_module(H)).vertex)
print("tested parabolics:", vertex_of(D11).to_json()["tested_parabolics"])

###############################################################################
# The norm element N = sum_d q^{-l(d)} T_d T_{d^-1} acts on a module as the
# composite of the unit and counit of the induction/restriction adjunction.
# On D(1,1) it is zero, which is why D(1,1) is not projective.

ad = adjunction_data(D11, (1, 1))
print("zeta on D(1,1):", ad.zeta.to_lists(), "triangle identities hold:", ad.ok)

###############################################################################
# Simples of H_q(S_n) have the vertex predicted by their block.

for n, e in [(3, 3), (4, 2), (4, 3)]:
    for mu, D in simple_modules(n, e).items():
        found = vertex_of(D, certified=True).vertex
        print(f"n={n} e={e} D{mu}: vertex {found}, predicted {predicted_vertex_of_block(block_of(mu, e))}")

###############################################################################
# Projective covers always have trivial vertex.  At n = 4, e = 2 there is one
# block, of weight 2, so simples have vertex S_2 x S_2.  No simple and no
# projective reaches the intermediate S_2, but a small induced module does:
# induce D(1,1,1) of H_q(S_3), tensored with the trivial module of S_1.

print("P(2,1,1):", vertex_of(projective_cover(4, 2, (2, 1, 1))).vertex)
H4 = algebra(4, 2)
D = simple_modules(3, 2)[Partition((1, 1, 1))]
X = HModule(H4, (3, 1), D.dim, dict(D.gens), label="D(1,1,1) x triv")
M = induce_module(X)
print(f"Ind(D(1,1,1) x triv): dimension {M.dim}, vertex {vertex_of(M, certified=True).vertex}")
