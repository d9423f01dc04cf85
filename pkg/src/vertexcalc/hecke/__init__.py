"""The Hecke algebra H_q(S_n) over Q(zeta_e) and its finite-dimensional modules."""
from .algebra import HeckeAlgebra, HElement, SizeGuardError
from .modules import (
    ConventionError,
    HModule,
    SpechtModule,
    algebra_radical,
    contravariant_radical,
    hom_space,
    induce_module,
    one_dim_module,
    regular_module,
    restrict_module,
)
from .relative import (
    AdjunctionData,
    NotCertifiedError,
    VertexResult,
    adjunction_data,
    is_relatively_projective,
    is_summand,
    mackey_module_check,
    trace_ideal_contains_identity,
    vertex_of,
)
from .characters import (
    decomposition_numbers,
    full_character,
    projective_cover,
    simple_modules,
    wedderburn_check,
)

__all__ = [
    "HeckeAlgebra", "HElement", "SizeGuardError", "ConventionError", "HModule", "SpechtModule",
    "algebra_radical", "contravariant_radical", "hom_space", "induce_module", "one_dim_module",
    "regular_module", "restrict_module", "AdjunctionData", "NotCertifiedError", "VertexResult",
    "adjunction_data", "is_relatively_projective", "is_summand", "mackey_module_check",
    "trace_ideal_contains_identity", "vertex_of", "decomposition_numbers", "full_character",
    "projective_cover", "simple_modules", "wedderburn_check",
]
