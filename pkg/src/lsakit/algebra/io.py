"""JSON algebra files.

Format::

    {"name": ..., "dim": n, "field": "exact" | "numeric", "basis": [labels],
     "products": [{"left": a, "right": b, "result": [{"basis": c, "value": "p/q"}]}]}

Omitted products are zero. Saving writes only nonzero products, in basis
order, so load -> save -> load is bit-exact in exact mode.
"""

import json
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, Field, ValidationError, model_validator

from ..errors import AlgebraFormatError, LsaError
from ..field import ScalarField, get_field
from .core import Algebra


class ResultTerm(BaseModel):
    basis: str = Field(description="Label of the basis element")
    value: str = Field(description="Scalar coefficient as a string")


class ProductEntry(BaseModel):
    left: str = Field(description="Left factor label")
    right: str = Field(description="Right factor label")
    result: list[ResultTerm] = Field(default_factory=list, description="Nonzero terms of the product")


class AlgebraFile(BaseModel):
    """On-disk representation of an algebra."""

    name: str = Field(description="Algebra name")
    dim: int = Field(ge=0, description="Dimension")
    field: Literal["exact", "numeric"] = Field(default="exact", description="Scalar field mode")
    basis: list[str] = Field(description="Basis labels")
    products: list[ProductEntry] = Field(default_factory=list, description="Nonzero products")
    notes: list[str] = Field(default_factory=list, description="Provenance remarks")

    @model_validator(mode="after")
    def _check_shape(self) -> "AlgebraFile":
        if len(self.basis) != self.dim:
            raise ValueError(f"dim is {self.dim} but {len(self.basis)} basis labels are given")
        if len(set(self.basis)) != len(self.basis):
            raise ValueError("basis labels must be unique")
        known = set(self.basis)
        seen: set[tuple[str, str]] = set()
        for entry in self.products:
            key = (entry.left, entry.right)
            if key in seen:
                raise ValueError(f"product {entry.left}*{entry.right} listed twice")
            seen.add(key)
            labels = {entry.left, entry.right} | {t.basis for t in entry.result}
            if not labels <= known:
                raise ValueError(f"unknown labels {sorted(labels - known)}")
        return self


def algebra_from_dict(data: dict[str, Any], field: ScalarField | None = None) -> Algebra:
    """Build an algebra from its JSON dictionary.

    Args:
        data: Parsed JSON object
        field: Field override; defaults to the file's own ``field`` entry

    Raises:
        AlgebraFormatError: On schema violations or malformed scalars
    """
    try:
        parsed = AlgebraFile.model_validate(data)
    except ValidationError as e:
        raise AlgebraFormatError(f"Invalid algebra file: {e}") from e
    target = field or get_field(parsed.field)
    products = {}
    for entry in parsed.products:
        terms: dict[str, Any] = {}
        for term in entry.result:
            if term.basis in terms:
                raise AlgebraFormatError(f"term {term.basis} repeated in {entry.left}*{entry.right}")
            terms[term.basis] = target.parse(term.value)
        products[(entry.left, entry.right)] = terms
    try:
        return Algebra.from_products(parsed.name, parsed.basis, products, target, parsed.notes)
    except LsaError as e:
        raise AlgebraFormatError(str(e)) from e


def algebra_to_dict(A: Algebra) -> dict[str, Any]:
    products = []
    for i, left in enumerate(A.basis):
        for j, right in enumerate(A.basis):
            terms = [
                {"basis": A.basis[k], "value": A.field.to_string(c)}
                for k, c in enumerate(A.table[i][j])
                if not A.field.is_zero(c)
            ]
            if terms:
                products.append({"left": left, "right": right, "result": terms})
    data: dict[str, Any] = {
        "name": A.name,
        "dim": A.dim,
        "field": A.field.mode.value,
        "basis": list(A.basis),
        "products": products,
    }
    if A.notes:
        data["notes"] = list(A.notes)
    return data


def dumps_algebra(A: Algebra) -> str:
    return json.dumps(algebra_to_dict(A), indent=2, ensure_ascii=False) + "\n"


def save_algebra(A: Algebra, path: Path | str) -> None:
    Path(path).write_text(dumps_algebra(A), encoding="utf-8", newline="\n")


def load_algebra(path: Path | str, field: ScalarField | None = None) -> Algebra:
    """Read an algebra file.

    Raises:
        AlgebraFormatError: If the file is missing, not JSON or not a valid algebra
    """
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError as e:
        raise AlgebraFormatError(f"No such file: {path}") from e
    except json.JSONDecodeError as e:
        raise AlgebraFormatError(f"{path} is not valid JSON: {e}") from e
    if not isinstance(data, dict):
        raise AlgebraFormatError(f"{path} must contain a JSON object")
    return algebra_from_dict(data, field)
