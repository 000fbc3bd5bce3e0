"""Scalar fields and the linear algebra every other module consumes."""

from .matrix import (
    Matrix,
    Vector,
    as_vector,
    format_vector,
    inverse,
    kernel,
    linear_combination,
    rank,
    row_reduce,
    solve_linear,
    unit_vector,
    vec_add,
    vec_eq,
    vec_is_zero,
    vec_scale,
    vec_sub,
    zero_vector,
)
from .scalar import EXACT, ExactField, FieldMode, NumericField, Scalar, ScalarField, get_field
from .spectral import (
    characteristic_polynomial,
    determinant,
    eigenvalue_clusters,
    eigenvalues_in_field,
    exp_matrix,
    exp_nilpotent,
    generalized_eigenspace,
    is_nilpotent,
    jordan_chevalley_semisimple,
)
from .subspace import Subspace, is_direct_sum

__all__ = [
    "EXACT",
    "ExactField",
    "FieldMode",
    "Matrix",
    "NumericField",
    "Scalar",
    "ScalarField",
    "Subspace",
    "Vector",
    "as_vector",
    "characteristic_polynomial",
    "determinant",
    "eigenvalue_clusters",
    "eigenvalues_in_field",
    "exp_matrix",
    "exp_nilpotent",
    "format_vector",
    "generalized_eigenspace",
    "get_field",
    "inverse",
    "is_direct_sum",
    "is_nilpotent",
    "jordan_chevalley_semisimple",
    "kernel",
    "linear_combination",
    "rank",
    "row_reduce",
    "solve_linear",
    "unit_vector",
    "vec_add",
    "vec_eq",
    "vec_is_zero",
    "vec_scale",
    "vec_sub",
    "zero_vector",
]
