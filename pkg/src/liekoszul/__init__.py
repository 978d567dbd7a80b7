"""Exact root-system, character and Hilbert-matrix computations for the
Koszul algebras attached to a root subset Psi(xi) of a simple Lie algebra."""
from .charlib import (Character, adjoint_ext_power, adjoint_sym_power, decompose,
                      hom_dim_tensor, irrep_character, mult_in, tensor_decompose, weyl_dim)
from .errors import IncomparableError, InternalInconsistencyError, ValidationError
from .koszul import (PolyMatrix, duality_check, ext_matrix, find_attaining_weight,
                     global_dimension, hilbert_matrix_ext, hilbert_matrix_sym, koszul_report,
                     koszulity_check)
from .meshquiver import build_mesh_quiver, hom_dimensions
from .psi import (PosetSlice, PsiSet, check_support_lemma, compute_psi, enumerate_down_set,
                  enumerate_interval, is_positive, leq_psi)
from .rootsys import LieType, RootSystem, build_root_system, root_system

__version__ = "0.1.0"


def clear_caches() -> None:
    """Drop every in-process memo (characters, decompositions, root systems)."""
    from . import charlib, koszul, rootsys

    charlib.clear_memory_cache()
    for fn in (charlib._freudenthal, charlib._signed_shifts, koszul._decomposition,
               rootsys.build_root_system):
        fn.cache_clear()
