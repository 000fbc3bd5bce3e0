"""Dense matrices over a scalar field and row-reduction primitives."""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import TypeAlias

import numpy as np
import sympy
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from ..errors import DimensionMismatch, SingularMatrix
from .scalar import Scalar, ScalarField

Vector: TypeAlias = tuple[Scalar, ...]


# Vectors


def zero_vector(field: ScalarField, n: int) -> Vector:
    return (field.zero,) * n


def unit_vector(field: ScalarField, n: int, i: int) -> Vector:
    return tuple(field.one if k == i else field.zero for k in range(n))


def as_vector(field: ScalarField, values: Iterable) -> Vector:
    return tuple(field.convert(v) for v in values)


def vec_add(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatch(f"Vector lengths differ: {len(u)} != {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatch(f"Vector lengths differ: {len(u)} != {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c: Scalar, v: Vector) -> Vector:
    return tuple(c * a for a in v)


def vec_is_zero(field: ScalarField, v: Vector) -> bool:
    return all(field.is_zero(a) for a in v)


def vec_eq(field: ScalarField, u: Vector, v: Vector) -> bool:
    return len(u) == len(v) and vec_is_zero(field, vec_sub(u, v))


def linear_combination(field: ScalarField, coeffs: Sequence[Scalar], vectors: Sequence[Vector], n: int) -> Vector:
    out = zero_vector(field, n)
    for c, v in zip(coeffs, vectors):
        if not field.is_zero(c):
            out = vec_add(out, vec_scale(c, v))
    return out


def format_vector(field: ScalarField, v: Vector) -> list[str]:
    return [field.to_string(a) for a in v]


@dataclass(frozen=True, eq=False)
class Matrix:
    """Immutable rectangular matrix; ``rows[i][j]`` is the (i, j) entry."""

    field: ScalarField
    rows: tuple[tuple[Scalar, ...], ...]
    nrows: int
    ncols: int

    def __post_init__(self):
        if len(self.rows) != self.nrows or any(len(r) != self.ncols for r in self.rows):
            raise DimensionMismatch("Matrix rows are not rectangular")

    # Construction

    @classmethod
    def from_rows(cls, field: ScalarField, rows: Iterable[Iterable], ncols: int | None = None) -> "Matrix":
        data = tuple(tuple(field.convert(a) for a in row) for row in rows)
        width = ncols if ncols is not None else (len(data[0]) if data else 0)
        return cls(field, data, len(data), width)

    @classmethod
    def from_columns(cls, field: ScalarField, columns: Sequence[Vector], nrows: int) -> "Matrix":
        data = tuple(tuple(col[i] for col in columns) for i in range(nrows))
        return cls(field, data, nrows, len(columns))

    @classmethod
    def zeros(cls, field: ScalarField, nrows: int, ncols: int | None = None) -> "Matrix":
        ncols = nrows if ncols is None else ncols
        return cls(field, tuple((field.zero,) * ncols for _ in range(nrows)), nrows, ncols)

    @classmethod
    def identity(cls, field: ScalarField, n: int) -> "Matrix":
        return cls(field, tuple(unit_vector(field, n, i) for i in range(n)), n, n)

    @classmethod
    def from_numpy(cls, field: ScalarField, array: np.ndarray) -> "Matrix":
        return cls.from_rows(field, ([complex(a) for a in row] for row in array), array.shape[1])

    # Shape and access

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "Matrix":
        return Matrix(self.field, tuple(self.columns()), self.ncols, self.nrows)

    # Arithmetic

    def _check_same_shape(self, other: "Matrix") -> None:
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatch(
                f"Shapes differ: {self.nrows}x{self.ncols} vs {other.nrows}x{other.ncols}"
            )

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        rows = tuple(vec_add(r, s) for r, s in zip(self.rows, other.rows))
        return Matrix(self.field, rows, self.nrows, self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        rows = tuple(vec_sub(r, s) for r, s in zip(self.rows, other.rows))
        return Matrix(self.field, rows, self.nrows, self.ncols)

    def __neg__(self) -> "Matrix":
        return self.scale(-self.field.one)

    def scale(self, c: Scalar) -> "Matrix":
        return Matrix(self.field, tuple(vec_scale(c, r) for r in self.rows), self.nrows, self.ncols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"Cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
        cols = other.columns()
        zero = self.field.zero
        rows = []
        for row in self.rows:
            out = []
            for col in cols:
                acc = zero
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + a * b
                out.append(acc)
            rows.append(tuple(out))
        return Matrix(self.field, tuple(rows), self.nrows, other.ncols)

    def apply(self, v: Vector) -> Vector:
        if len(v) != self.ncols:
            raise DimensionMismatch(f"Vector of length {len(v)} for {self.ncols} columns")
        zero = self.field.zero
        out = []
        for row in self.rows:
            acc = zero
            for a, b in zip(row, v):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def power(self, k: int) -> "Matrix":
        result = Matrix.identity(self.field, self.nrows)
        base = self
        while k > 0:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def commutator(self, other: "Matrix") -> "Matrix":
        return self @ other - other @ self

    def trace(self) -> Scalar:
        acc = self.field.zero
        for i in range(min(self.nrows, self.ncols)):
            acc = acc + self.rows[i][i]
        return acc

    # Comparison

    def is_zero(self) -> bool:
        return all(vec_is_zero(self.field, r) for r in self.rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            return False
        return (self - other).is_zero()

    __hash__ = None

    def max_magnitude(self) -> float:
        return max((self.field.magnitude(a) for r in self.rows for a in r), default=0.0)

    # Conversions

    def to_domain_matrix(self) -> DomainMatrix:
        """Exact-mode view as a sympy ``DomainMatrix`` over ``QQ_I``."""
        return DomainMatrix([list(r) for r in self.rows], (self.nrows, self.ncols), self.field.domain)

    def to_numpy(self) -> np.ndarray:
        return np.array(
            [[self.field.to_complex(a) for a in r] for r in self.rows], dtype=complex
        ).reshape(self.nrows, self.ncols)

    def to_sympy(self) -> sympy.Matrix:
        return sympy.Matrix(self.nrows, self.ncols, lambda i, j: self.field.to_sympy(self.rows[i][j]))

    def to_strings(self) -> list[list[str]]:
        return [format_vector(self.field, r) for r in self.rows]


# Row reduction


def _domain_matrix(field: ScalarField, rows: Sequence[Sequence[Scalar]], ncols: int) -> DomainMatrix:
    return DomainMatrix([list(r) for r in rows], (len(rows), ncols), field.domain)


def row_reduce(
    field: ScalarField, rows: Sequence[Sequence[Scalar]], ncols: int
) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row echelon form.

    Exact mode delegates to ``DomainMatrix.rref`` over ``QQ_I``, so the result
    is canonical. Numeric mode runs Gauss-Jordan with the largest pivot and
    treats entries below ``eps * max|entry|`` as zero.

    Args:
        field: Scalar field of the entries
        rows: Row vectors
        ncols: Number of columns

    Returns:
        The nonzero rows of the reduced form and their pivot columns
    """
    if not rows or not ncols:
        return [], []
    if field.is_exact:
        reduced, pivots = _domain_matrix(field, rows, ncols).rref()
        return reduced.to_list()[: len(pivots)], list(pivots)
    return _row_reduce_numeric(field, rows, ncols)


def _row_reduce_numeric(
    field: ScalarField, rows: Sequence[Sequence[Scalar]], ncols: int
) -> tuple[list[list[Scalar]], list[int]]:
    m = [list(r) for r in rows]
    max_mag = max((field.magnitude(a) for r in m for a in r), default=0.0)
    tol = field.pivot_threshold(max_mag)
    pivots: list[int] = []
    lead = 0
    for col in range(ncols):
        if lead >= len(m):
            break
        best = max(range(lead, len(m)), key=lambda i: abs(m[i][col]))
        if not (abs(m[best][col]) > tol and abs(m[best][col]) > 0):
            continue
        m[lead], m[best] = m[best], m[lead]
        inv = field.one / m[lead][col]
        m[lead] = [a * inv for a in m[lead]]
        m[lead][col] = field.one
        for i in range(len(m)):
            if i != lead:
                f = m[i][col]
                if f:
                    m[i] = [a - f * b for a, b in zip(m[i], m[lead])]
                    m[i][col] = field.zero
        pivots.append(col)
        lead += 1
    reduced = [[field.zero if abs(a) <= tol else a for a in r] for r in m[:lead]]
    return reduced, pivots


def rank(M: Matrix) -> int:
    if M.field.is_exact and M.nrows and M.ncols:
        return M.to_domain_matrix().rank()
    return len(row_reduce(M.field, M.rows, M.ncols)[1])


def kernel(M: Matrix) -> list[Vector]:
    """Basis of {v : Mv = 0}, one vector per free column."""
    field = M.field
    if not M.ncols:
        return []
    if not M.nrows:
        return [unit_vector(field, M.ncols, j) for j in range(M.ncols)]
    if field.is_exact:
        return [tuple(v) for v in M.to_domain_matrix().nullspace().to_list()]
    reduced, pivots = row_reduce(field, M.rows, M.ncols)
    free = [j for j in range(M.ncols) if j not in pivots]
    basis = []
    for f in free:
        v = [field.zero] * M.ncols
        v[f] = field.one
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def solve_linear(A: Matrix, b: Sequence[Scalar]) -> Vector | None:
    """Solve ``A x = b``.

    Args:
        A: Coefficient matrix
        b: Right-hand side of length ``A.nrows``

    Returns:
        A solution (free variables set to zero), or None if the system is inconsistent

    Raises:
        DimensionMismatch: If ``b`` does not match the row count
    """
    if len(b) != A.nrows:
        raise DimensionMismatch(f"Right-hand side has length {len(b)}, expected {A.nrows}")
    field = A.field
    augmented = [list(row) + [field.convert(c)] for row, c in zip(A.rows, b)]
    reduced, pivots = row_reduce(field, augmented, A.ncols + 1)
    if A.ncols in pivots:
        return None
    x = [field.zero] * A.ncols
    for row, p in zip(reduced, pivots):
        x[p] = row[A.ncols]
    return tuple(x)


def inverse(M: Matrix) -> Matrix:
    """Inverse of a square matrix.

    Raises:
        SingularMatrix: If M is not invertible
    """
    if not M.is_square:
        raise DimensionMismatch("Only square matrices are invertible")
    n = M.nrows
    field = M.field
    if not n:
        return M
    if field.is_exact:
        try:
            rows = M.to_domain_matrix().inv().to_list()
            return Matrix(field, tuple(tuple(r) for r in rows), n, n)
        except DMNonInvertibleMatrixError as e:
            raise SingularMatrix("Matrix is singular") from e
    augmented = [list(row) + list(unit_vector(field, n, i)) for i, row in enumerate(M.rows)]
    reduced, pivots = row_reduce(field, augmented, 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise SingularMatrix("Matrix is singular")
    return Matrix(field, tuple(tuple(r[n:]) for r in reduced), n, n)


def block_diagonal(field: ScalarField, blocks: Sequence[Matrix]) -> Matrix:
    n = sum(b.nrows for b in blocks)
    rows = []
    offset = 0
    for b in blocks:
        for r in b.rows:
            rows.append((field.zero,) * offset + tuple(r) + (field.zero,) * (n - offset - b.ncols))
        offset += b.ncols
    return Matrix(field, tuple(rows), n, n)
