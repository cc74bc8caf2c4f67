"""Exact computations with curves and Dehn twists on surfaces, and the matrix relations they induce."""

from .exact_linalg import ExactMatrix, jordan_flag, range_sum_dim, rank
from .relations import (
    MatrixFamily,
    PreconditionError,
    check_dim_inf_bound,
    check_naive_bound,
    check_nm_relations,
    random_valid_family,
    witness_family,
    witness_search,
)
from .scenarios import (
    CurveFamily,
    braid_family,
    delta_family,
    derive_matrix_family,
    evaluate,
    implied_bound,
    johnson_family,
    main_family,
)
from .symplectic import (
    HomologyClass,
    NoRelationUpTo,
    RelationFound,
    free_certify,
    pairing,
    twist_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "ExactMatrix", "jordan_flag", "range_sum_dim", "rank",
    "MatrixFamily", "PreconditionError", "check_dim_inf_bound", "check_naive_bound",
    "check_nm_relations", "random_valid_family", "witness_family", "witness_search",
    "CurveFamily", "braid_family", "delta_family", "derive_matrix_family", "evaluate",
    "implied_bound", "johnson_family", "main_family",
    "HomologyClass", "NoRelationUpTo", "RelationFound", "free_certify", "pairing",
    "twist_matrix",
]
