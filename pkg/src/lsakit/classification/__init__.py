"""Catalog, graph enumeration, structure-constant solving and classification."""

from .catalog import (
    CATALOG,
    CatalogEntry,
    algebra_from_constants,
    auslander3,
    catalog,
    family5,
    family5_mod,
    list_catalog,
    root_label,
    series,
    simple4,
    simple4_printed,
)
from .classify import catalog_match, classify, classify_async, family_names, verify_algebra
from .enumeration import (
    GraphCandidate,
    allowed_edges,
    canonical_edges,
    enumerate_graphs,
    enumerate_template,
    passes_properties,
)
from .isomorphism import (
    DistinguishedPoint,
    diagonal_isomorphism,
    find_diagonal_isomorphism,
    iso_family5,
    projective_point,
    projective_points,
)
from .solver import (
    StructureFamily,
    StructureSystem,
    UnsolvedBranch,
    normalization,
    solve_structure_constants,
    structure_system,
)
from .templates import (
    MAX_TEMPLATE_DIM,
    VertexTemplate,
    exceptional_values,
    generic_template,
    normalize_root,
    progression,
    specialize,
    symmetric_pairs,
    templates_for,
)

__all__ = [
    "CATALOG",
    "CatalogEntry",
    "DistinguishedPoint",
    "GraphCandidate",
    "MAX_TEMPLATE_DIM",
    "StructureFamily",
    "StructureSystem",
    "UnsolvedBranch",
    "VertexTemplate",
    "algebra_from_constants",
    "allowed_edges",
    "auslander3",
    "canonical_edges",
    "catalog",
    "catalog_match",
    "classify",
    "classify_async",
    "diagonal_isomorphism",
    "enumerate_graphs",
    "enumerate_template",
    "exceptional_values",
    "family5",
    "family5_mod",
    "family_names",
    "find_diagonal_isomorphism",
    "generic_template",
    "iso_family5",
    "list_catalog",
    "normalization",
    "normalize_root",
    "passes_properties",
    "progression",
    "projective_point",
    "projective_points",
    "root_label",
    "series",
    "simple4",
    "simple4_printed",
    "solve_structure_constants",
    "specialize",
    "structure_system",
    "symmetric_pairs",
    "templates_for",
    "verify_algebra",
]
