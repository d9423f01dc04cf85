"""
Induction, restriction and the Mackey formula
=============================================

In the Grothendieck group a module of a Young subgroup S_mu is an integer
combination of tuples of Specht labels.  Induction multiplies labels with
Littlewood-Richardson coefficients, and restriction splits them.  The Mackey
formula writes Res_nu Ind_mu x as a sum over double cosets S_nu u S_mu.
Each such double coset is a contingency table with row sums nu and column
sums mu.
"""
from vertexcalc import KClass, double_cosets, induce_class, lr_coefficient, mackey_check, restrict_class
from vertexcalc.hecke.characters import algebra
from vertexcalc.hecke.relative import mackey_module_check
from vertexcalc.hecke.modules import one_dim_module

# an LR coefficient and the induction product it feeds
print("c^{(3,2,1)}_{(2,1),(2,1)} =", lr_coefficient((2, 1), (2, 1), (3, 2, 1)))
x = KClass.basis((2, 1), [(2,), (1,)])
print("Ind S(2) x S(1) =", induce_class(x))
print("Res_(2,1) S(2,1) =", restrict_class(KClass.basis((3,), [(2, 1)]), (2, 1)))

###############################################################################
# Double cosets S_(2,2) \ S_4 / S_(3,1) as tables, and both sides of Mackey.

nu, mu = (2, 2), (3, 1)
for dc in double_cosets(nu, mu):
    print("table", dc.table, "intersection", dc.intersection_type())
y = KClass.basis(mu, [(2, 1), (1,)])
ok, lhs, rhs = mackey_check(nu, mu, y)
print("Mackey holds:", ok)
print("  ", lhs)

###############################################################################
# The same identity at the level of actual H_q(S_4)-modules, comparing
# characters.  The seed is one-dimensional: T_1 acts by q and T_2 by -1.

H = algebra(4, 3)
X = one_dim_module(H, (2, 2), ["q", "-1"])
ok, _, _ = mackey_module_check((3, 1), (2, 2), X)
print("module-level Mackey holds:", ok)
