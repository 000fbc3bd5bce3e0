"""Derived algebras: control examples, sums, subalgebras, quotients and base changes."""

from collections.abc import Sequence
from random import Random

from ..errors import BadParameters, DimensionMismatch, SingularMatrix
from ..field import EXACT, Matrix, ScalarField, Subspace, Vector, inverse, zero_vector
from .core import Algebra, multiply


def zero_algebra(n: int, field: ScalarField = EXACT) -> Algebra:
    """n-dimensional algebra with all products zero."""
    basis = tuple(f"e{i + 1}" for i in range(n))
    return Algebra.from_products(f"zero{n}", basis, {}, field)


def idempotent_algebra(field: ScalarField = EXACT) -> Algebra:
    """One-dimensional algebra e*e = e."""
    return Algebra.from_products("idempotent1", ("e",), {("e", "e"): {"e": 1}}, field)


def direct_sum(A: Algebra, B: Algebra) -> Algebra:
    """A + B with products between the summands set to zero."""
    if A.field.mode != B.field.mode:
        raise BadParameters("Summands use different scalar fields")
    if set(A.basis) & set(B.basis):
        prefixes = (A.name, B.name) if A.name != B.name else (f"{A.name}#1", f"{B.name}#2")
        left = tuple(f"{prefixes[0]}.{b}" for b in A.basis)
        right = tuple(f"{prefixes[1]}.{b}" for b in B.basis)
    else:
        left, right = A.basis, B.basis
    n = A.dim + B.dim
    field = A.field
    zero = zero_vector(field, n)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i < A.dim and j < A.dim:
                row.append(tuple(A.table[i][j]) + (field.zero,) * B.dim)
            elif i >= A.dim and j >= A.dim:
                row.append((field.zero,) * A.dim + tuple(B.table[i - A.dim][j - A.dim]))
            else:
                row.append(zero)
        rows.append(tuple(row))
    return Algebra(f"{A.name}+{B.name}", left + right, tuple(rows), field)


def _restrict(A: Algebra, name: str, vectors: Sequence[Vector], labels: Sequence[str], coords) -> Algebra:
    rows = []
    for u in vectors:
        rows.append(tuple(coords(multiply(A, u, v)) for v in vectors))
    return Algebra(name, tuple(labels), tuple(rows), A.field)


def _labels_for(A: Algebra, vectors: Sequence[Vector], prefix: str) -> list[str]:
    labels = []
    for k, v in enumerate(vectors):
        support = [i for i, c in enumerate(v) if not A.field.is_zero(c)]
        if len(support) == 1 and A.field.eq(v[support[0]], A.field.one):
            labels.append(A.basis[support[0]])
        else:
            labels.append(f"{prefix}{k + 1}")
    return labels if len(set(labels)) == len(labels) else [f"{prefix}{k + 1}" for k in range(len(vectors))]


def subalgebra(A: Algebra, S: Subspace, name: str | None = None) -> Algebra:
    """Restriction of the product to a product-closed subspace, in its echelon basis.

    Raises:
        BadParameters: If S is not closed under the product
    """
    for u in S.basis:
        for v in S.basis:
            if not S.contains(multiply(A, u, v)):
                raise BadParameters("Subspace is not closed under the product")
    labels = _labels_for(A, S.basis, "s")
    return _restrict(A, name or f"{A.name}|sub", S.basis, labels, S.coordinates)


def quotient(A: Algebra, ideal: Subspace, name: str | None = None) -> Algebra:
    """A / I, represented on the unit vectors of the non-pivot coordinates of I.

    Reduction by the echelon basis of I clears every pivot coordinate, so the
    remaining coordinates are the class of a vector.

    Raises:
        BadParameters: If I is not a two-sided ideal
    """
    for x in range(A.dim):
        e = A.basis_vector(x)
        for v in ideal.basis:
            if not (ideal.contains(multiply(A, e, v)) and ideal.contains(multiply(A, v, e))):
                raise BadParameters("Quotient requires a two-sided ideal")
    complement = ideal.complement_basis()
    free = [j for j in range(A.dim) if j not in ideal.pivots]
    labels = [A.basis[j] for j in free]

    def coords(w: Vector) -> Vector:
        r = ideal.residual(w)
        return tuple(r[j] for j in free)

    return _restrict(A, name or f"{A.name}/ideal", complement, labels, coords)


def change_basis(A: Algebra, P: Matrix, labels: Sequence[str] | None = None, name: str | None = None) -> Algebra:
    """Structure constants in the basis given by the columns of P.

    Raises:
        SingularMatrix: If the columns are dependent
    """
    if P.nrows != A.dim or P.ncols != A.dim:
        raise DimensionMismatch(f"Change of basis must be {A.dim}x{A.dim}")
    P_inv = inverse(P)
    cols = P.columns()
    rows = tuple(tuple(P_inv.apply(multiply(A, u, v)) for v in cols) for u in cols)
    return Algebra(name or f"{A.name}'", tuple(labels or A.basis), rows, A.field, A.notes)


def rescale(A: Algebra, factors: Sequence) -> Algebra:
    """Diagonal base change e_i -> s_i e_i."""
    if len(factors) != A.dim:
        raise DimensionMismatch(f"Expected {A.dim} factors")
    field = A.field
    scales = [field.convert(s) for s in factors]
    if any(field.is_zero(s) for s in scales):
        raise SingularMatrix("Rescaling factors must be nonzero")
    P = Matrix.from_rows(
        field,
        [[scales[i] if i == j else field.zero for j in range(A.dim)] for i in range(A.dim)],
    )
    return change_basis(A, P, name=f"{A.name}~")


def perturb(A: Algebra, seed: int, count: int = 1, height: int = 2) -> Algebra:
    """Add small integers to ``count`` pseudo-randomly chosen structure constants."""
    if A.dim == 0:
        return A
    rng = Random(seed)
    field = A.field
    table = [[list(v) for v in row] for row in A.table]
    for _ in range(count):
        i, j, k = (rng.randrange(A.dim) for _ in range(3))
        delta = rng.choice([d for d in range(-height, height + 1) if d])
        table[i][j][k] = table[i][j][k] + field.convert(delta)
    rows = tuple(tuple(tuple(v) for v in row) for row in table)
    return Algebra(f"{A.name}#p{seed}", A.basis, rows, field)
