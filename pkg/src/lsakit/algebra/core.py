"""Algebras given by structure constants and the left-symmetric identities."""

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from typing import Any

import sympy

from ..errors import BadParameters, DimensionMismatch
from ..field import (
    EXACT,
    Matrix,
    Scalar,
    ScalarField,
    Vector,
    determinant,
    unit_vector,
    vec_add,
    vec_eq,
    vec_is_zero,
    vec_scale,
    vec_sub,
    zero_vector,
)


@dataclass(frozen=True, eq=False)
class Algebra:
    """A finite-dimensional algebra over a scalar field.

    ``table[i][j]`` holds the coordinates of the product e_i e_j. Absent
    products are explicit zero vectors. Left-symmetry is not assumed; raw
    tables that violate it are representable so the checker can report them.
    """

    name: str
    basis: tuple[str, ...]
    table: tuple[tuple[Vector, ...], ...]
    field: ScalarField = EXACT
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        n = len(self.basis)
        if len(set(self.basis)) != n:
            raise BadParameters(f"Duplicate basis labels in {self.name}")
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise DimensionMismatch(f"Structure tensor of {self.name} is not {n}x{n}")
        if any(len(v) != n for row in self.table for v in row):
            raise DimensionMismatch(f"Product vectors of {self.name} must have length {n}")

    @classmethod
    def from_products(
        cls,
        name: str,
        basis: Sequence[str],
        products: Mapping[tuple[str, str], Mapping[str, Any]],
        field: ScalarField = EXACT,
        notes: Iterable[str] = (),
    ) -> "Algebra":
        """Build an algebra from a sparse ``{(left, right): {label: coefficient}}`` table."""
        labels = tuple(basis)
        index = {label: i for i, label in enumerate(labels)}
        n = len(labels)
        rows = [[zero_vector(field, n) for _ in range(n)] for _ in range(n)]
        for (left, right), result in products.items():
            if left not in index or right not in index:
                raise BadParameters(f"Unknown basis label in product {left}*{right}")
            vec = list(zero_vector(field, n))
            for label, value in result.items():
                if label not in index:
                    raise BadParameters(f"Unknown basis label {label!r} in result")
                vec[index[label]] = field.convert(value)
            rows[index[left]][index[right]] = tuple(vec)
        table = tuple(tuple(r) for r in rows)
        return cls(name, labels, table, field, tuple(notes))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self, label: str) -> int:
        try:
            return self.basis.index(label)
        except ValueError as e:
            raise BadParameters(f"{self.name} has no basis element {label!r}") from e

    def basis_vector(self, i: int | str) -> Vector:
        i = self.index(i) if isinstance(i, str) else i
        return unit_vector(self.field, self.dim, i)

    def element(self, coeffs: Mapping[str, Any] | Sequence[Any]) -> Vector:
        """Vector from a ``{label: coefficient}`` mapping or a full coordinate list."""
        if isinstance(coeffs, Mapping):
            vec = list(zero_vector(self.field, self.dim))
            for label, value in coeffs.items():
                vec[self.index(label)] = self.field.convert(value)
            return tuple(vec)
        if len(coeffs) != self.dim:
            raise DimensionMismatch(f"Expected {self.dim} coordinates, got {len(coeffs)}")
        return tuple(self.field.convert(c) for c in coeffs)

    def product(self, i: int, j: int) -> Vector:
        return self.table[i][j]

    def zero(self) -> Vector:
        return zero_vector(self.field, self.dim)

    def same_table(self, other: "Algebra") -> bool:
        return (
            self.basis == other.basis
            and all(
                vec_eq(self.field, u, v)
                for row_a, row_b in zip(self.table, other.table)
                for u, v in zip(row_a, row_b)
            )
        )

    def with_field(self, field: ScalarField) -> "Algebra":
        """The same table read in another scalar field."""
        table = tuple(
            tuple(tuple(field.convert(a) for a in v) for v in row) for row in self.table
        )
        return Algebra(self.name, self.basis, table, field, self.notes)

    def format(self, v: Vector) -> str:
        """Human-readable linear combination such as ``2*e2 - e1``."""
        terms = []
        for label, c in zip(self.basis, v):
            if self.field.is_zero(c):
                continue
            s = self.field.to_string(c)
            if s == "1":
                terms.append(label)
            elif s == "-1":
                terms.append(f"-{label}")
            else:
                terms.append(f"({s})*{label}" if ("+" in s[1:] or "-" in s[1:]) else f"{s}*{label}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


@dataclass(frozen=True)
class IdentityResult:
    """Outcome of an identity check, with the first violating basis tuple."""

    holds: bool
    witness: tuple[str, ...] | None = None
    values: tuple[Vector, ...] = ()
    identity: str = ""

    def __bool__(self) -> bool:
        return self.holds


def _check_vector(A: Algebra, v: Sequence[Scalar]) -> Vector:
    if len(v) != A.dim:
        raise DimensionMismatch(f"Vector of length {len(v)} in algebra of dimension {A.dim}")
    return tuple(v)


def multiply(A: Algebra, x: Sequence[Scalar], y: Sequence[Scalar]) -> Vector:
    """Bilinear product sum_ij x_i y_j e_i e_j."""
    x, y = _check_vector(A, x), _check_vector(A, y)
    out = A.zero()
    for i, xi in enumerate(x):
        if A.field.is_zero(xi):
            continue
        for j, yj in enumerate(y):
            if A.field.is_zero(yj):
                continue
            prod = A.table[i][j]
            if not vec_is_zero(A.field, prod):
                out = vec_add(out, vec_scale(xi * yj, prod))
    return out


def associator(A: Algebra, x: Vector, y: Vector, z: Vector) -> Vector:
    """(x, y, z) = x(yz) - (xy)z."""
    return vec_sub(multiply(A, x, multiply(A, y, z)), multiply(A, multiply(A, x, y), z))


def lie_bracket(A: Algebra, x: Vector, y: Vector) -> Vector:
    return vec_sub(multiply(A, x, y), multiply(A, y, x))


def is_left_symmetric(A: Algebra) -> IdentityResult:
    """(x, y, z) = (y, x, z) on all basis triples.

    Pairs are visited with i < j and z in basis order; the first violation is
    returned together with both associators.
    """
    e = [A.basis_vector(i) for i in range(A.dim)]
    for i in range(A.dim):
        for j in range(i + 1, A.dim):
            for k in range(A.dim):
                lhs = associator(A, e[i], e[j], e[k])
                rhs = associator(A, e[j], e[i], e[k])
                if not vec_eq(A.field, lhs, rhs):
                    return IdentityResult(
                        False, (A.basis[i], A.basis[j], A.basis[k]), (lhs, rhs), "left-symmetry"
                    )
    return IdentityResult(True, identity="left-symmetry")


def check_lie_admissible(A: Algebra) -> IdentityResult:
    """Jacobi identity for the commutator on all basis triples."""
    e = [A.basis_vector(i) for i in range(A.dim)]
    for i in range(A.dim):
        for j in range(i + 1, A.dim):
            for k in range(j + 1, A.dim):
                x, y, z = e[i], e[j], e[k]
                total = vec_add(
                    vec_add(
                        lie_bracket(A, x, lie_bracket(A, y, z)),
                        lie_bracket(A, y, lie_bracket(A, z, x)),
                    ),
                    lie_bracket(A, z, lie_bracket(A, x, y)),
                )
                if not vec_is_zero(A.field, total):
                    return IdentityResult(
                        False, (A.basis[i], A.basis[j], A.basis[k]), (total,), "jacobi"
                    )
    return IdentityResult(True, identity="jacobi")


def left_operator(A: Algebra, x: Sequence[Scalar]) -> Matrix:
    """Matrix of y -> xy; column j is x e_j."""
    x = _check_vector(A, x)
    cols = [multiply(A, x, A.basis_vector(j)) for j in range(A.dim)]
    return Matrix.from_columns(A.field, cols, A.dim)


def right_operator(A: Algebra, x: Sequence[Scalar]) -> Matrix:
    """Matrix of y -> yx; column j is e_j x."""
    x = _check_vector(A, x)
    cols = [multiply(A, A.basis_vector(j), x) for j in range(A.dim)]
    return Matrix.from_columns(A.field, cols, A.dim)


def ad_operator(A: Algebra, x: Sequence[Scalar]) -> Matrix:
    """Matrix of y -> [x, y] = L(x) - R(x)."""
    return left_operator(A, x) - right_operator(A, x)


def check_L_representation(A: Algebra) -> IdentityResult:
    """L([x, y]) = [L(x), L(y)] on all basis pairs."""
    e = [A.basis_vector(i) for i in range(A.dim)]
    L = [left_operator(A, v) for v in e]
    for i in range(A.dim):
        for j in range(i + 1, A.dim):
            lhs = left_operator(A, lie_bracket(A, e[i], e[j]))
            if lhs != L[i].commutator(L[j]):
                return IdentityResult(False, (A.basis[i], A.basis[j]), identity="L-representation")
    return IdentityResult(True, identity="L-representation")


def check_LR_identity(A: Algebra) -> IdentityResult:
    """[L(x), R(z)] = R(xz) - R(z)R(x) on all basis pairs."""
    e = [A.basis_vector(i) for i in range(A.dim)]
    L = [left_operator(A, v) for v in e]
    R = [right_operator(A, v) for v in e]
    for i in range(A.dim):
        for k in range(A.dim):
            lhs = L[i].commutator(R[k])
            rhs = right_operator(A, multiply(A, e[i], e[k])) - R[k] @ R[i]
            if lhs != rhs:
                return IdentityResult(False, (A.basis[i], A.basis[k]), identity="LR-commutation")
    return IdentityResult(True, identity="LR-commutation")


@dataclass(frozen=True)
class UnitalExtension:
    """The algebra F*1 + g; the unit is the last basis element of ``extended``.

    ``left_symmetric`` is the identity check run on ``extended`` when it is built;
    it holds exactly when it holds for ``base``.
    """

    base: Algebra
    extended: Algebra
    left_symmetric: IdentityResult

    @property
    def unit_index(self) -> int:
        return self.base.dim

    @property
    def unit(self) -> Vector:
        return self.extended.basis_vector(self.unit_index)

    def lift(self, x: Sequence[Scalar]) -> Vector:
        """Embed x in g as a vector of g1."""
        return tuple(_check_vector(self.base, x)) + (self.base.field.zero,)

    def point(self, x: Sequence[Scalar]) -> Vector:
        """The vector 1 + x of g1."""
        return self.lift(x)[:-1] + (self.base.field.one,)

    def project(self, v: Vector) -> Vector:
        """Drop the unit coordinate."""
        return tuple(v[:-1])


def unital_extension(A: Algebra) -> UnitalExtension:
    """Adjoin a two-sided identity ``1``."""
    n = A.dim
    f = A.field
    label = "1"
    while label in A.basis:
        label = f"{label}'"
    rows = []
    for i in range(n + 1):
        row = []
        for j in range(n + 1):
            if i == n:
                row.append(unit_vector(f, n + 1, j))
            elif j == n:
                row.append(unit_vector(f, n + 1, i))
            else:
                row.append(tuple(A.table[i][j]) + (f.zero,))
        rows.append(tuple(row))
    extended = Algebra(f"{A.name}+1", A.basis + (label,), tuple(rows), f, A.notes)
    return UnitalExtension(A, extended, is_left_symmetric(extended))


def affine_field(A: Algebra, x: Vector, y: Vector) -> Vector:
    """F_x(y) = xy + x."""
    return vec_add(multiply(A, x, y), _check_vector(A, x))


def right_det_polynomial(A: Algebra, x: Sequence[Scalar]) -> Scalar:
    """P(x) = det(I + R(x))."""
    return determinant(Matrix.identity(A.field, A.dim) + right_operator(A, x))


def extended_det(E: UnitalExtension, v: Sequence[Scalar]) -> Scalar:
    """P1(v) = det(R1(v)) on the unital extension."""
    return determinant(right_operator(E.extended, v))


def coordinate_symbols(A: Algebra, prefix: str = "x") -> list[sympy.Symbol]:
    return list(sympy.symbols(f"{prefix}1:{A.dim + 1}")) if A.dim else []


def _generic_operator(A: Algebra, operator, symbols: Sequence[sympy.Symbol]) -> sympy.Matrix:
    total = sympy.zeros(A.dim, A.dim)
    for i, s in enumerate(symbols):
        total += s * operator(A, A.basis_vector(i)).to_sympy()
    return total


def right_det_symbolic(A: Algebra, symbols: Sequence[sympy.Symbol] | None = None) -> sympy.Expr:
    """P(x) as an expanded polynomial in the coordinates of x."""
    symbols = list(symbols) if symbols is not None else coordinate_symbols(A)
    M = sympy.eye(A.dim) + _generic_operator(A, right_operator, symbols)
    return sympy.expand(M.det(method="berkowitz")) if A.dim else sympy.Integer(1)


def left_det_symbolic(A: Algebra, symbols: Sequence[sympy.Symbol] | None = None) -> sympy.Expr:
    """det L(y) as an expanded polynomial in the coordinates of y."""
    symbols = list(symbols) if symbols is not None else coordinate_symbols(A, "y")
    M = _generic_operator(A, left_operator, symbols)
    return sympy.expand(M.det(method="berkowitz")) if A.dim else sympy.Integer(1)


def verify_left_degenerate(A: Algebra) -> bool:
    """det L(y) vanishes identically in y."""
    return left_det_symbolic(A) == 0
