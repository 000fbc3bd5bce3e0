"""Isomorphism within the lambda = 2 family.

With the symmetric-pair constants fixed at 1, a diagonal rescaling multiplies
(alpha, beta, gamma) by one common factor, so two members are isomorphic
exactly when their triples are collinear. The family is a projective line
with three points where one extra product, and so one graph edge, vanishes.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

import sympy

from ..algebra import Algebra
from ..errors import BadParameters, DimensionMismatch
from ..field import Scalar
from .catalog import _parameter, family5_mod

Triple = tuple[sympy.Expr, sympy.Expr, sympy.Expr]

DEFAULT_GRID = ("1", "-1", "2", "-2", "1/2", "-1/2", "i", "-i", "3", "1/3", "4", "1/4")


def _triple(t: Sequence[Any]) -> Triple:
    if len(t) != 3:
        raise BadParameters(f"Expected (alpha, beta, gamma), got {t!r}")
    a, b, g = (_parameter(v, n) for v, n in zip(t, ("alpha", "beta", "gamma")))
    if sympy.expand(2 * a - b - g) != 0:
        raise BadParameters(f"({a}, {b}, {g}) violates 2*alpha = beta + gamma")
    return (a, b, g)


def iso_family5(t: Sequence[Any], t2: Sequence[Any]) -> bool:
    """family5_mod(t) and family5_mod(t2) are isomorphic iff t and t2 are collinear.

    Raises:
        BadParameters: If either triple violates 2*alpha = beta + gamma
    """
    u, v = _triple(t), _triple(t2)
    if all(x == 0 for x in u) or all(x == 0 for x in v):
        return all(x == 0 for x in u) and all(x == 0 for x in v)
    cross = sympy.Matrix(u).cross(sympy.Matrix(v))
    return all(sympy.expand(c) == 0 for c in cross)


def projective_point(t: Sequence[Any]) -> Triple | None:
    """The triple scaled so its first nonzero entry is 1; None for (0, 0, 0)."""
    u = _triple(t)
    for x in u:
        if x != 0:
            return tuple(sympy.simplify(y / x) for y in u)
    return None


@dataclass(frozen=True)
class DistinguishedPoint:
    name: str
    point: Triple
    dropped_edge: tuple[int, int]
    product: str


def projective_points() -> list[DistinguishedPoint]:
    """The points of the family where alpha, beta or gamma vanishes, with the left edge that disappears."""
    one, two, zero = sympy.Integer(1), sympy.Integer(2), sympy.Integer(0)
    return [
        DistinguishedPoint("alpha=0", (zero, one, -one), (-1, 1), "e2 e-1"),
        DistinguishedPoint("beta=0", (one, zero, two), (2, 1), "e-1 e2"),
        DistinguishedPoint("gamma=0", (one, two, zero), (-1, -2), "e-1 e-1"),
    ]


def diagonal_isomorphism(
    A: Algebra, B: Algebra, grid: Sequence[Any] = DEFAULT_GRID
) -> list[Scalar] | None:
    """Factors s with e_i -> s_i e_i an isomorphism A -> B, searched over the grid.

    Backtracks over the basis; a constraint s_k A_ijk = s_i s_j B_ijk is checked
    as soon as its largest index is assigned.

    Raises:
        DimensionMismatch: If the algebras differ in dimension or field
    """
    if A.dim != B.dim or type(A.field) is not type(B.field):
        raise DimensionMismatch(f"Cannot compare {A.name} and {B.name}")
    field = A.field
    values = [field.convert(v) for v in grid]
    n = A.dim
    constraints: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                a, b = A.table[i][j][k], B.table[i][j][k]
                if field.is_zero(a) and field.is_zero(b):
                    continue
                constraints[max(i, j, k)].append((i, j, k))

    s: list[Scalar] = []

    def consistent(level: int) -> bool:
        for i, j, k in constraints[level]:
            if not field.eq(s[k] * A.table[i][j][k], s[i] * s[j] * B.table[i][j][k]):
                return False
        return True

    def search(level: int) -> bool:
        if level == n:
            return True
        for value in values:
            s.append(value)
            if consistent(level) and search(level + 1):
                return True
            s.pop()
        return False

    return list(s) if search(0) else None


def find_diagonal_isomorphism(
    t: Sequence[Any], t2: Sequence[Any], grid: Sequence[Any] = DEFAULT_GRID
) -> list[Scalar] | None:
    """Explicit rescaling between family5_mod(t) and family5_mod(t2), or None if the grid has none.

    Raises:
        BadParameters: If either triple violates 2*alpha = beta + gamma
    """
    A = family5_mod(*_triple(t))
    B = family5_mod(*_triple(t2))
    return diagonal_isomorphism(A, B, grid)
