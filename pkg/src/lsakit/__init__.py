"""Exact toolkit for complete left-symmetric algebras."""

__version__ = "0.1.0"

from .algebra import Algebra, is_left_symmetric, load_algebra, save_algebra
from .classification import catalog, classify
from .completeness import is_complete
from .decomposition import make_canonical
from .errors import LsaError
from .field import EXACT, NumericField, get_field
from .graphs import build_graph, check_properties
from .ideals import is_simple

__all__ = [
    "EXACT",
    "Algebra",
    "LsaError",
    "NumericField",
    "build_graph",
    "catalog",
    "check_properties",
    "classify",
    "get_field",
    "is_complete",
    "is_left_symmetric",
    "is_simple",
    "load_algebra",
    "make_canonical",
    "save_algebra",
]
