"""Root decompositions of an algebra with respect to a Cartan subalgebra."""

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any, Literal

from ..algebra import Algebra, ad_operator, left_operator, multiply
from ..contracts.reports import DecompositionModel, PartModel
from ..errors import BadParameters, NumericFallback
from ..field import (
    Matrix,
    Scalar,
    ScalarField,
    Subspace,
    Vector,
    eigenvalue_clusters,
    generalized_eigenspace,
    is_direct_sum,
    linear_combination,
    solve_linear,
    vec_is_zero,
)
from .cartan import require_cartan

Rep = Literal["ad", "L"]
Root = tuple[Scalar, ...]


@dataclass(frozen=True)
class RootPart:
    root: Root
    space: Subspace

    def is_zero_root(self, field: ScalarField) -> bool:
        return all(field.is_zero(c) for c in self.root)


@dataclass(frozen=True)
class RootDecomposition:
    """Simultaneous generalized eigenspaces of rep(x), x running over a Cartan basis.

    Parts are sorted by root, componentwise by (real, imaginary) part. A root
    is stored as its values on ``cartan.basis``.
    """

    algebra: Algebra
    cartan: Subspace
    rep: Rep
    parts: tuple[RootPart, ...]

    @property
    def field(self) -> ScalarField:
        return self.algebra.field

    def roots(self) -> list[Root]:
        return [p.root for p in self.parts]

    def part(self, root: Sequence[Any]) -> Subspace | None:
        """Space of ``root``, or None when it is not a root."""
        target = tuple(self.field.convert(c) for c in root)
        for p in self.parts:
            if _same_root(self.field, p.root, target):
                return p.space
        return None

    def zero_part(self) -> Subspace:
        space = self.part((0,) * len(self.cartan.basis))
        return space if space is not None else Subspace.zero(self.field, self.cartan.ambient)

    def nonzero_parts(self) -> list[RootPart]:
        return [p for p in self.parts if not p.is_zero_root(self.field)]

    def is_one_dimensional(self) -> bool:
        return all(p.space.dim <= 1 for p in self.parts)

    def split(self, v: Vector) -> list[Vector]:
        """Components of v along the parts, in part order."""
        columns = [b for p in self.parts for b in p.space.basis]
        M = Matrix.from_columns(self.field, columns, len(v))
        coeffs = solve_linear(M, v)
        if coeffs is None:
            raise NumericFallback("Parts do not span the ambient space")
        out, k = [], 0
        for p in self.parts:
            d = p.space.dim
            out.append(linear_combination(self.field, coeffs[k : k + d], p.space.basis, len(v)))
            k += d
        return out

    def same_parts(self, other: "RootDecomposition") -> bool:
        if len(self.parts) != len(other.parts):
            return False
        return all(
            _same_root(self.field, p.root, q.root) and p.space == q.space
            for p, q in zip(self.parts, other.parts)
        )


def _same_root(field: ScalarField, a: Root, b: Root) -> bool:
    return len(a) == len(b) and all(field.eq(x, y) for x, y in zip(a, b))


def simultaneous_decomposition(
    field: ScalarField, n: int, operators: Sequence[Matrix]
) -> list[RootPart]:
    """Intersect the generalized eigenspaces of a commuting family, operator by operator.

    Raises:
        NumericFallback: If an eigenvalue leaves Q(i) in exact mode
    """
    parts = [RootPart((), Subspace.full(field, n))]
    for op in operators:
        refined = []
        clusters = eigenvalue_clusters(op)
        spaces = [(value, generalized_eigenspace(op, value)) for value, _ in clusters]
        for part in parts:
            for value, space in spaces:
                piece = part.space.intersection(space)
                if not piece.is_zero():
                    refined.append(RootPart(part.root + (value,), piece))
        parts = refined
    parts.sort(key=lambda p: tuple(field.sort_key(c) for c in p.root))
    if n and not is_direct_sum(field, n, [p.space for p in parts]):
        raise NumericFallback("Generalized eigenspaces do not form a direct sum")
    return parts


def representation(rep: Rep):
    if rep == "ad":
        return ad_operator
    if rep == "L":
        return left_operator
    raise BadParameters(f"Unknown representation {rep!r}; expected 'ad' or 'L'")


def root_decomposition(A: Algebra, h: Subspace, rep: Rep = "L") -> RootDecomposition:
    """Root decomposition of A for rep in {ad, L} with respect to the Cartan subalgebra h.

    Raises:
        NotCartan: If h is not a Cartan subalgebra
        NumericFallback: If an eigenvalue leaves Q(i) in exact mode
    """
    operator = representation(rep)
    require_cartan(A, h)
    ops = [operator(A, x) for x in h.basis]
    parts = simultaneous_decomposition(A.field, A.dim, ops)
    return RootDecomposition(A, h, rep, tuple(parts))


def grading_check(A: Algebra, decomposition: RootDecomposition) -> bool:
    """g^a g^b lies in g^(a+b), or vanishes when a+b is not a root."""
    field = A.field
    for p in decomposition.parts:
        for q in decomposition.parts:
            total = tuple(a + b for a, b in zip(p.root, q.root))
            target = decomposition.part(total)
            for u in p.space.basis:
                for v in q.space.basis:
                    w = multiply(A, u, v)
                    if target is None:
                        if not vec_is_zero(field, w):
                            return False
                    elif not target.contains(w):
                        return False
    return True


@dataclass(frozen=True)
class RealPart:
    """Real subspace spanned by a real root space or a conjugate pair of root spaces."""

    roots: tuple[Root, ...]
    space: Subspace


def _conjugate(field: ScalarField, a: Scalar) -> Scalar:
    if field.is_exact:
        return field.conjugate(a)
    return complex(a).conjugate()


def _real_vector(field: ScalarField, v: Vector) -> Vector:
    if field.is_exact:
        return tuple(field.real_part(a) for a in v)
    return tuple(complex(complex(a).real) for a in v)


def _imag_vector(field: ScalarField, v: Vector) -> Vector:
    if field.is_exact:
        return tuple(field.imag_part(a) for a in v)
    return tuple(complex(complex(a).imag) for a in v)


def real_parts(decomposition: RootDecomposition) -> list[RealPart]:
    """Real forms of the parts of a decomposition of a real algebra.

    A real root contributes the real and imaginary parts of its basis; a
    non-real root is paired with its conjugate and the pair contributes one
    real subspace of twice the complex dimension.

    Raises:
        BadParameters: If the table is not real or a root has no conjugate root
    """
    A = decomposition.algebra
    field = A.field
    for row in A.table:
        for v in row:
            if not vec_is_zero(field, _imag_vector(field, v)):
                raise BadParameters(f"{A.name} has non-real structure constants")
    out: list[RealPart] = []
    used: set[int] = set()
    for i, p in enumerate(decomposition.parts):
        if i in used:
            continue
        conj = tuple(_conjugate(field, c) for c in p.root)
        j = next(
            (j for j, q in enumerate(decomposition.parts) if j not in used and _same_root(field, q.root, conj)),
            None,
        )
        if j is None:
            raise BadParameters(f"Root {[field.to_string(c) for c in p.root]} has no conjugate root")
        used.update({i, j})
        vectors = []
        for b in p.space.basis:
            vectors.append(_real_vector(field, b))
            vectors.append(_imag_vector(field, b))
        roots = (p.root,) if i == j else (p.root, decomposition.parts[j].root)
        out.append(RealPart(roots, Subspace.span(field, A.dim, vectors)))
    return out


def decomposition_model(decomposition: RootDecomposition) -> DecompositionModel:
    field = decomposition.field
    return DecompositionModel(
        rep=decomposition.rep,
        cartan=decomposition.cartan.to_strings(),
        parts=[
            PartModel(root=[field.to_string(c) for c in p.root], basis=p.space.to_strings())
            for p in decomposition.parts
        ],
    )


def decomposition_to_dict(decomposition: RootDecomposition) -> dict[str, Any]:
    """Cartan basis vectors, then (root, basis vectors) per part; scalars as strings."""
    return decomposition_model(decomposition).model_dump()
