"""
Decomposition numbers two ways
==============================

The LLT algorithm computes the canonical basis of the level-one Fock space.
Its coefficients are polynomials in v, and at v = 1 they are the
decomposition numbers [S_lam : D_mu] of H_q(S_n).  Here those numbers are
compared with the ones read off the Hecke algebra itself.  That second
route builds each simple module as the head of a Specht module and then
splits Specht characters into simple characters.
"""
from vertexcalc import llt_canonical_basis
from vertexcalc.fock import evaluate_at_one
from vertexcalc.hecke.characters import decomposition_numbers, simple_modules, wedderburn_check

n, e = 4, 2
D = llt_canonical_basis(n, e)

# rows are all partitions of n, columns the e-restricted ones
width = 10
print("".ljust(width) + "".join(mu.to_text().ljust(width) for mu in D.cols))
for lam in D.rows:
    cells = [repr(D.entry(lam, mu)) if D.entry(lam, mu) else "." for mu in D.cols]
    print(lam.to_text().ljust(width) + "".join(c.ljust(width) for c in cells))

###############################################################################
# Setting v = 1 gives integers.  The Hecke engine computes the same table
# from characters over Q(zeta_e).

at_one = evaluate_at_one(D)
from_llt = {(lam, mu): at_one[i][j] for i, lam in enumerate(D.rows) for j, mu in enumerate(D.cols)}
from_algebra = decomposition_numbers(n, e)
print("tables agree:", from_llt == from_algebra)

###############################################################################
# Dimensions of the simple modules, and the Wedderburn count
# sum (dim D)^2 = dim H - dim rad H.

for mu, Dm in simple_modules(n, e).items():
    print(f"dim D{mu} = {Dm.dim}")
print(wedderburn_check(n, e))
