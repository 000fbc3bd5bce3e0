"""Subalgebras and quotients of a complete algebra are complete.

Kept out of the package namespace: it needs the canonical decomposition and
ideal closures, both of which sit above the completeness criteria.
"""

from collections.abc import Iterable, Sequence

import sympy

from ..algebra import Algebra, coordinate_symbols, multiply, quotient, right_det_symbolic, subalgebra
from ..contracts.reports import CheckModel, CorollaryReport
from ..decomposition import make_canonical
from ..errors import LsaError, NotComplete
from ..field import Scalar, Subspace
from ..ideals import ideal_closure
from ..tracing import get_tracer
from .criteria import is_complete


def subalgebra_closure(A: Algebra, generators: Iterable[Sequence[Scalar]]) -> Subspace:
    """Least product-closed subspace containing the generators."""
    S = Subspace.span(A.field, A.dim, (tuple(g) for g in generators))
    while True:
        products = [multiply(A, u, v) for u in S.basis for v in S.basis]
        grown = Subspace.span(A.field, A.dim, list(S.basis) + products)
        if grown.dim == S.dim:
            return S
        S = grown


def polynomial_degree(A: Algebra) -> int:
    """Total degree of P(x) = det(I + R(x))."""
    symbols = coordinate_symbols(A)
    P = right_det_symbolic(A, symbols)
    if not symbols or P.is_number:
        return 0
    return sympy.Poly(P, *symbols).total_degree()


def polynomial_degree_check(A: Algebra) -> bool:
    return polynomial_degree(A) <= A.dim


def _derived_algebras(A: Algebra) -> list[tuple[str, Algebra]]:
    tracer = get_tracer()
    derived: list[tuple[str, Algebra]] = []
    seen: list[Subspace] = []
    try:
        g0 = make_canonical(A).decomposition.zero_part()
        derived.append(("subalgebra g0", subalgebra(A, g0, f"{A.name}|g0")))
        seen.append(g0)
    except LsaError as e:
        tracer.debug(f"Skipping g0 of {A.name}: {e}")
    for i, label in enumerate(A.basis):
        S = subalgebra_closure(A, [A.basis_vector(i)])
        if S.is_full() or any(S == T for T in seen):
            continue
        seen.append(S)
        derived.append((f"subalgebra <{label}>", subalgebra(A, S, f"{A.name}|<{label}>")))
    ideals: list[Subspace] = []
    for i, label in enumerate(A.basis):
        I = ideal_closure(A, [A.basis_vector(i)]).subspace
        if I.is_full() or any(I == J for J in ideals):
            continue
        ideals.append(I)
        derived.append((f"quotient by ({label})", quotient(A, I, f"{A.name}/({label})")))
    return derived


def check_corollaries(A: Algebra) -> CorollaryReport:
    """Completeness of g0, of the subalgebras generated by basis vectors, and of quotients by their ideals.

    Raises:
        NotComplete: If A itself is not complete
    """
    report = is_complete(A)
    if not report.verdict:
        raise NotComplete(f"{A.name} is not complete; witness {report.witness_label}")
    checks = []
    for name, B in _derived_algebras(A):
        verdict = is_complete(B)
        checks.append(
            CheckModel(
                name=name,
                holds=verdict.verdict,
                witness=[verdict.witness_label] if verdict.witness_label else None,
            )
        )
    return CorollaryReport(
        algebra=A.name,
        holds=all(c.holds for c in checks),
        checks=checks,
        polynomial_degree=polynomial_degree(A),
    )
