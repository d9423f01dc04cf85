"""Exact computations for Hecke algebras of symmetric groups at roots of unity.

Subpackages and modules:

partitions   partitions, e-cores, e-quotients and Wilcox decompositions
blocks       block and cuspidal tables, predicted vertices, parabolic types
kgroup       Grothendieck-group induction, restriction and the Mackey formula
fock         the LLT algorithm on the level-one Fock space
hecke        the algebra over Q(zeta_e), its modules, adjunction data and vertices
verify       verification suites and reports (also behind the ``vertexcalc`` CLI)
"""
from .partitions import (
    Partition,
    conjugate,
    e_core,
    e_core_quotient,
    e_weight,
    enumerate_partitions,
    is_e_restricted,
    syt_count,
    wilcox_decompose,
)
from .blocks import (
    BlockId,
    ParabolicType,
    block_of,
    blocks_of_size,
    cuspidal_support,
    predicted_vertex_of_block,
    predicted_vertex_set,
)
from .kgroup import KClass, double_cosets, induce_class, lr_coefficient, mackey_check, restrict_class
from .fock import DecompositionMatrix, LaurentPoly, llt_canonical_basis

__version__ = "0.1.0"

__all__ = [
    "Partition", "conjugate", "e_core", "e_core_quotient", "e_weight", "enumerate_partitions",
    "is_e_restricted", "syt_count", "wilcox_decompose",
    "BlockId", "ParabolicType", "block_of", "blocks_of_size", "cuspidal_support",
    "predicted_vertex_of_block", "predicted_vertex_set",
    "KClass", "double_cosets", "induce_class", "lr_coefficient", "mackey_check", "restrict_class",
    "DecompositionMatrix", "LaurentPoly", "llt_canonical_basis",
]
