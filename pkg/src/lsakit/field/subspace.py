"""Subspaces stored as reduced echelon bases."""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from ..errors import DimensionMismatch
from .matrix import Matrix, Vector, kernel, linear_combination, row_reduce, unit_vector, vec_eq
from .scalar import Scalar, ScalarField


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of F^n with its canonical reduced row echelon basis.

    Two subspaces built from different spanning sets of the same space have
    identical ``basis`` rows in exact mode, so equality is row-set equality.
    """

    field: ScalarField
    ambient: int
    basis: tuple[Vector, ...]
    pivots: tuple[int, ...]

    @classmethod
    def span(cls, field: ScalarField, ambient: int, vectors: Iterable[Sequence[Scalar]]) -> "Subspace":
        rows = [tuple(v) for v in vectors]
        for v in rows:
            if len(v) != ambient:
                raise DimensionMismatch(f"Vector of length {len(v)} in F^{ambient}")
        reduced, pivots = row_reduce(field, rows, ambient)
        return cls(field, ambient, tuple(tuple(r) for r in reduced), tuple(pivots))

    @classmethod
    def zero(cls, field: ScalarField, ambient: int) -> "Subspace":
        return cls(field, ambient, (), ())

    @classmethod
    def full(cls, field: ScalarField, ambient: int) -> "Subspace":
        return cls.span(field, ambient, (unit_vector(field, ambient, i) for i in range(ambient)))

    @classmethod
    def kernel_of(cls, M: Matrix) -> "Subspace":
        return cls.span(M.field, M.ncols, kernel(M))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient

    def coordinates(self, v: Vector) -> tuple[Scalar, ...]:
        """Coordinates of ``v`` in the echelon basis (valid when ``v`` lies in the span)."""
        return tuple(v[p] for p in self.pivots)

    def residual(self, v: Vector) -> Vector:
        """Remainder of ``v`` after reduction by the basis; zero iff ``v`` is in the span."""
        out = list(v)
        for row, p in zip(self.basis, self.pivots):
            c = out[p]
            if c:
                out = [a - c * b for a, b in zip(out, row)]
        return tuple(out)

    def contains(self, v: Vector) -> bool:
        if len(v) != self.ambient:
            raise DimensionMismatch(f"Vector of length {len(v)} in F^{self.ambient}")
        return all(self.field.is_zero(a) for a in self.residual(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.field, self.ambient, self.basis + other.basis)

    def intersection(self, other: "Subspace") -> "Subspace":
        if self.ambient != other.ambient:
            raise DimensionMismatch("Subspaces live in different ambient spaces")
        if self.is_zero() or other.is_zero():
            return Subspace.zero(self.field, self.ambient)
        negated = [tuple(-a for a in v) for v in other.basis]
        M = Matrix.from_columns(self.field, list(self.basis) + negated, self.ambient)
        vectors = [
            linear_combination(self.field, k[: self.dim], self.basis, self.ambient)
            for k in kernel(M)
        ]
        return Subspace.span(self.field, self.ambient, vectors)

    def image(self, M: Matrix) -> "Subspace":
        return Subspace.span(self.field, M.nrows, (M.apply(v) for v in self.basis))

    def is_invariant(self, M: Matrix) -> bool:
        return all(self.contains(M.apply(v)) for v in self.basis)

    def complement_basis(self) -> list[Vector]:
        """Unit vectors on the non-pivot coordinates, spanning a complement."""
        return [
            unit_vector(self.field, self.ambient, j)
            for j in range(self.ambient)
            if j not in self.pivots
        ]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        if self.ambient != other.ambient or self.pivots != other.pivots:
            return False
        return all(vec_eq(self.field, u, v) for u, v in zip(self.basis, other.basis))

    __hash__ = None

    def to_strings(self) -> list[list[str]]:
        return [[self.field.to_string(a) for a in v] for v in self.basis]


def is_direct_sum(field: ScalarField, ambient: int, parts: Sequence[Subspace]) -> bool:
    """True when the parts are independent and together span F^ambient."""
    total = sum(p.dim for p in parts)
    spanned = Subspace.span(field, ambient, (v for p in parts for v in p.basis))
    return total == ambient and spanned.dim == ambient
