"""Structure-constant algebras, their identities and derived constructions."""

from .constructions import (
    change_basis,
    direct_sum,
    idempotent_algebra,
    perturb,
    quotient,
    rescale,
    subalgebra,
    zero_algebra,
)
from .core import (
    Algebra,
    IdentityResult,
    UnitalExtension,
    ad_operator,
    affine_field,
    associator,
    check_L_representation,
    check_lie_admissible,
    check_LR_identity,
    coordinate_symbols,
    extended_det,
    is_left_symmetric,
    left_det_symbolic,
    left_operator,
    lie_bracket,
    multiply,
    right_det_polynomial,
    right_det_symbolic,
    right_operator,
    unital_extension,
    verify_left_degenerate,
)
from .io import algebra_from_dict, algebra_to_dict, dumps_algebra, load_algebra, save_algebra

__all__ = [
    "Algebra",
    "IdentityResult",
    "UnitalExtension",
    "ad_operator",
    "affine_field",
    "algebra_from_dict",
    "algebra_to_dict",
    "associator",
    "change_basis",
    "check_L_representation",
    "check_LR_identity",
    "check_lie_admissible",
    "coordinate_symbols",
    "direct_sum",
    "dumps_algebra",
    "extended_det",
    "idempotent_algebra",
    "is_left_symmetric",
    "left_det_symbolic",
    "left_operator",
    "lie_bracket",
    "load_algebra",
    "multiply",
    "perturb",
    "quotient",
    "rescale",
    "right_det_polynomial",
    "right_det_symbolic",
    "right_operator",
    "save_algebra",
    "subalgebra",
    "unital_extension",
    "verify_left_degenerate",
    "zero_algebra",
]
