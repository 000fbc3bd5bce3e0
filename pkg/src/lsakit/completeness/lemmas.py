"""Identities of the unital extension behind the completeness criteria."""

import cmath
from collections.abc import Sequence
from dataclasses import dataclass

from ..algebra import (
    Algebra,
    UnitalExtension,
    ad_operator,
    extended_det,
    left_operator,
    right_operator,
    unital_extension,
)
from ..errors import DimensionMismatch, NotComplete, NumericFallback
from ..field import Scalar, Vector, exp_matrix
from .criteria import is_complete


def _as_extended(E: UnitalExtension, v: Sequence[Scalar]) -> Vector:
    if len(v) == E.base.dim:
        return E.lift(v)
    if len(v) == E.extended.dim:
        return tuple(v)
    raise DimensionMismatch(f"Vector of length {len(v)} fits neither g nor g1")


@dataclass(frozen=True)
class ConjugationCheck:
    holds: bool
    lhs: object
    rhs: object


def verify_conjugation_identity(
    A: Algebra | UnitalExtension, x: Sequence[Scalar], y: Sequence[Scalar]
) -> ConjugationCheck:
    """R(e^{L(y)} x) = e^{L(y)} R(x) e^{-ad y} in g1.

    ``x`` and ``y`` may be given in g (then lifted) or in g1. Exact mode needs
    nilpotent L(y) and ad(y); numeric mode uses scipy's matrix exponential.

    Raises:
        NotNilpotent: In exact mode when an exponent is not nilpotent
    """
    E = A if isinstance(A, UnitalExtension) else unital_extension(A)
    G = E.extended
    x1, y1 = _as_extended(E, x), _as_extended(E, y)
    exp_L = exp_matrix(left_operator(G, y1))
    exp_ad = exp_matrix(-ad_operator(G, y1))
    lhs = right_operator(G, exp_L.apply(x1))
    rhs = exp_L @ right_operator(G, x1) @ exp_ad
    return ConjugationCheck(lhs == rhs, lhs, rhs)


@dataclass(frozen=True)
class EigenfunctionCheck:
    """P1(e^{L(y)} x) against e^{Tr R(y)} P1(x)."""

    holds: bool
    character: complex | Scalar
    trace: Scalar
    lhs: Scalar
    rhs: Scalar


def verify_eigenfunction(
    E: Algebra | UnitalExtension, x: Sequence[Scalar], y: Sequence[Scalar]
) -> EigenfunctionCheck:
    """P1 is an eigenfunction of the action, with character e^{Tr R(y)}.

    In exact mode the exponent must be nilpotent, which forces Tr R(y) = 0
    and the character to be 1.
    """
    E = E if isinstance(E, UnitalExtension) else unital_extension(E)
    G = E.extended
    field = G.field
    x1, y1 = _as_extended(E, x), _as_extended(E, y)
    exp_L = exp_matrix(left_operator(G, y1))
    trace = right_operator(G, y1).trace()
    lhs = extended_det(E, exp_L.apply(x1))
    if field.is_exact:
        if not field.is_zero(trace):
            raise NumericFallback(
                f"Character e^{{Tr R(y)}} with Tr R(y) = {field.to_string(trace)} leaves Q(i)"
            )
        character = field.one
        holds = field.eq(lhs, extended_det(E, x1))
    else:
        character = cmath.exp(trace)
        holds = field.eq(lhs, character * extended_det(E, x1))
    rhs = character * extended_det(E, x1)
    return EigenfunctionCheck(holds, character, trace, lhs, rhs)


@dataclass(frozen=True)
class TraceInvariants:
    holds: bool
    witness: tuple[str, ...] | None = None
    identity: str = ""


def trace_invariants(A: Algebra) -> TraceInvariants:
    """Tr(R(x)R(y)) = 0 and Tr(R(x)^2 R(y)) = 0 as polynomial identities.

    By multilinearity the first reduces to Tr(R_i R_j) = 0 and the second to
    Tr((R_i R_j + R_j R_i) R_k) = 0 for i <= j.

    Raises:
        NotComplete: If A is not complete
    """
    if not is_complete(A).verdict:
        raise NotComplete(f"{A.name} is not complete")
    R = [right_operator(A, A.basis_vector(i)) for i in range(A.dim)]
    field = A.field
    for i in range(A.dim):
        for j in range(i, A.dim):
            if not field.is_zero((R[i] @ R[j]).trace()):
                return TraceInvariants(False, (A.basis[i], A.basis[j]), "Tr(R(x)R(y))")
    for i in range(A.dim):
        for j in range(i, A.dim):
            sym = R[i] @ R[j] + R[j] @ R[i]
            for k in range(A.dim):
                if not field.is_zero((sym @ R[k]).trace()):
                    return TraceInvariants(
                        False, (A.basis[i], A.basis[j], A.basis[k]), "Tr(R(x)^2 R(y))"
                    )
    return TraceInvariants(True)


def trace_diagonal(A: Algebra, word: Sequence[str]) -> list[Scalar]:
    """Diagonal of R(w_1) R(w_2) ... R(w_k) for basis labels w_i."""
    M = None
    for label in word:
        R = right_operator(A, A.basis_vector(label))
        M = R if M is None else M @ R
    if M is None:
        return []
    return [M.rows[i][i] for i in range(A.dim)]

