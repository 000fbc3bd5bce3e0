"""Argument helpers shared by the command verbs."""

from collections.abc import Iterable
from pathlib import Path
from typing import Any

from ..algebra import Algebra, load_algebra
from ..classification import CATALOG, catalog
from ..errors import AlgebraFormatError, BadParameters
from ..field import Scalar, ScalarField, get_field


def field_from_arguments(arguments: dict[str, Any]) -> ScalarField:
    """Numeric mode with --numeric, otherwise the configured field."""
    if arguments.get("numeric"):
        return get_field("numeric", arguments.get("eps"))
    return get_field(None, arguments.get("eps"))


def parse_params(pairs: Iterable[str] | None) -> dict[str, str]:
    """``k=v`` strings to a dict; values stay strings for the catalog to parse.

    Raises:
        BadParameters: On a pair without ``=`` or a repeated key
    """
    params: dict[str, str] = {}
    for pair in pairs or ():
        key, sep, value = pair.partition("=")
        if not sep or not key.strip():
            raise BadParameters(f"Expected k=v, got {pair!r}")
        key = key.strip()
        if key in params:
            raise BadParameters(f"Parameter {key} given twice")
        params[key] = value.strip()
    return params


def parse_seed(text: str | None, field: ScalarField, dim: int) -> list[Scalar] | None:
    """Comma-separated coordinates of a Cartan seed.

    Raises:
        BadParameters: If the seed does not have one coordinate per basis element
    """
    if not text:
        return None
    parts = [p for p in text.split(",") if p.strip()]
    if len(parts) != dim:
        raise BadParameters(f"Seed needs {dim} coordinates, got {len(parts)}")
    return [field.parse(p.strip()) for p in parts]


def resolve_algebra(source: str, field: ScalarField, params: dict[str, str] | None = None) -> Algebra:
    """An algebra file path, or the name of a catalog entry.

    Raises:
        AlgebraFormatError: If the source is neither an existing file nor a catalog name
    """
    path = Path(source)
    if path.is_file():
        return load_algebra(path, field)
    if source in CATALOG:
        return catalog(source, params, field)
    raise AlgebraFormatError(f"No algebra file or catalog entry named {source!r}")
