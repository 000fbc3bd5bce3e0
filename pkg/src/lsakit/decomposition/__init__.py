"""Cartan subalgebras, root decompositions and the canonical decomposition."""

from .canonical import (
    CanonicalForm,
    TransportWord,
    adjoint_word,
    apply_word,
    canonical_report,
    derivation_check,
    extended_left_decomposition,
    is_canonical,
    is_derivation,
    make_canonical,
    semisimple_parts_agree,
    transport_to_unit,
    unit_in_zero_part,
    zero_root_point,
)
from .cartan import (
    cartan_subalgebra,
    derived_series,
    is_cartan,
    is_nilpotent_subalgebra,
    is_solvable,
    lower_central_series,
    normalizer,
)
from .roots import (
    RealPart,
    RootDecomposition,
    RootPart,
    decomposition_model,
    decomposition_to_dict,
    grading_check,
    real_parts,
    root_decomposition,
)

__all__ = [
    "CanonicalForm",
    "RealPart",
    "RootDecomposition",
    "RootPart",
    "TransportWord",
    "adjoint_word",
    "apply_word",
    "canonical_report",
    "cartan_subalgebra",
    "decomposition_model",
    "decomposition_to_dict",
    "derivation_check",
    "derived_series",
    "extended_left_decomposition",
    "grading_check",
    "is_canonical",
    "is_cartan",
    "is_derivation",
    "is_nilpotent_subalgebra",
    "is_solvable",
    "lower_central_series",
    "make_canonical",
    "normalizer",
    "real_parts",
    "root_decomposition",
    "semisimple_parts_agree",
    "transport_to_unit",
    "unit_in_zero_part",
    "zero_root_point",
]
