"""Completeness of left-symmetric algebras.

A left-symmetric algebra is complete when any of the following equivalent
conditions holds for every x:

    (a) R(x) is nilpotent
    (b) det(I + R(x)) = 1
    (c) det(I + R(x)) != 0
    (d) Tr R(x) = 0

(d) is linear in x and decides; the others are verification passes.
"""

import itertools
from random import Random

import sympy
from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix

from ..algebra import (
    Algebra,
    check_lie_admissible,
    check_L_representation,
    check_LR_identity,
    coordinate_symbols,
    is_left_symmetric,
    right_det_polynomial,
    right_operator,
)
from ..algebra.core import IdentityResult
from ..config import get_settings
from ..contracts.reports import (
    CheckModel,
    CompletenessReport,
    Criterion,
    CriterionResult,
    IdentityReport,
)
from ..errors import NotLeftSymmetric
from ..field import format_vector, is_nilpotent, unit_vector
from ..tracing import TraceEvent, get_tracer


def _check_model(A: Algebra, result: IdentityResult) -> CheckModel:
    return CheckModel(
        name=result.identity,
        holds=result.holds,
        witness=list(result.witness) if result.witness else None,
        values=[format_vector(A.field, v) for v in result.values] or None,
    )


def identity_report(A: Algebra) -> IdentityReport:
    """Left-symmetry, its two operator forms, and Jacobi."""
    checks = [
        is_left_symmetric(A),
        check_L_representation(A),
        check_LR_identity(A),
        check_lie_admissible(A),
    ]
    report = IdentityReport(
        algebra=A.name,
        dim=A.dim,
        checks=[_check_model(A, c) for c in checks],
        notes=list(A.notes),
    )
    get_tracer().trace(
        TraceEvent.IDENTITY_CHECK,
        ok=report.all_hold(),
        preview=A.name,
        failed=[c.name for c in report.checks if not c.holds] or None,
    )
    return report


def _require_left_symmetric(A: Algebra) -> None:
    result = is_left_symmetric(A)
    if not result:
        raise NotLeftSymmetric(
            f"{A.name} is not left-symmetric; witness {result.witness}",
            witness=result.witness,
        )


def _trace_criterion(A: Algebra) -> CriterionResult:
    for i in range(A.dim):
        tr = right_operator(A, A.basis_vector(i)).trace()
        if not A.field.is_zero(tr):
            return CriterionResult(
                criterion=Criterion.TRACE,
                description="Tr R(e_i) = 0 for every basis element",
                holds=False,
                witness=format_vector(A.field, A.basis_vector(i)),
                detail=f"Tr R({A.basis[i]}) = {A.field.to_string(tr)}",
            )
    return CriterionResult(
        criterion=Criterion.TRACE,
        description="Tr R(e_i) = 0 for every basis element",
        holds=True,
    )


def is_complete(A: Algebra) -> CompletenessReport:
    """Decide completeness by the trace criterion.

    Raises:
        NotLeftSymmetric: If A fails the left-symmetry check
    """
    _require_left_symmetric(A)
    d = _trace_criterion(A)
    report = CompletenessReport(
        algebra=A.name,
        verdict=d.holds,
        criteria=[d],
        witness=d.witness,
        witness_label=_label_of(A, d.witness),
    )
    get_tracer().trace(TraceEvent.COMPLETENESS_CHECK, ok=d.holds, preview=A.name)
    return report


def _label_of(A: Algebra, witness: list[str] | None) -> str | None:
    if not witness:
        return None
    for i in range(A.dim):
        if format_vector(A.field, A.basis_vector(i)) == witness:
            return A.basis[i]
    return None


def _generic_right_operator(A: Algebra) -> tuple[list[list], object]:
    """R(x) for generic x, with entries in the polynomial ring Q(i)[x_1..x_n]."""
    symbols = coordinate_symbols(A)
    K = QQ_I[tuple(symbols)]
    Rs = [right_operator(A, A.basis_vector(i)).to_sympy() for i in range(A.dim)]
    rows = [
        [K.from_sympy(sympy.Add(*(s * R[p, q] for s, R in zip(symbols, Rs)))) for q in range(A.dim)]
        for p in range(A.dim)
    ]
    return rows, K


def _ring_matmul(X: list[list], Y: list[list], K) -> list[list]:
    n = len(X)
    return [[sum((X[i][k] * Y[k][j] for k in range(n)), K.zero) for j in range(n)] for i in range(n)]


def _nilpotent_criterion(A: Algebra) -> CriterionResult:
    description = "Tr R(x)^k vanishes identically for k = 1..n"
    if not A.field.is_exact:
        return _sampled_nilpotent(A, description)
    M, K = _generic_right_operator(A)
    power = M
    for k in range(1, A.dim + 1):
        tr = sum((power[i][i] for i in range(A.dim)), K.zero)
        if tr != K.zero:
            witness = next(
                (A.basis_vector(i) for i in range(A.dim) if not is_nilpotent(right_operator(A, A.basis_vector(i)))),
                None,
            )
            return CriterionResult(
                criterion=Criterion.NILPOTENT,
                description=description,
                holds=False,
                witness=format_vector(A.field, witness) if witness else None,
                detail=f"Tr R(x)^{k} = {K.to_sympy(tr)}",
            )
        power = _ring_matmul(power, M, K)
    return CriterionResult(criterion=Criterion.NILPOTENT, description=description, holds=True)


def _det_criterion(A: Algebra) -> CriterionResult:
    description = "det(I + R(x)) = 1 identically"
    if not A.field.is_exact:
        return _sampled_det(A, description)
    M, K = _generic_right_operator(A)
    # det(I + M) = (-1)^n chi_M(-1)
    coeffs = DomainMatrix(M, (A.dim, A.dim), K).charpoly() if A.dim else [K.one]
    n = A.dim
    value = K.zero
    for k, c in enumerate(coeffs):
        value += c * K.convert((-1) ** (n - k))
    if n % 2:
        value = -value
    poly = sympy.expand(K.to_sympy(value))
    holds = poly == 1
    return CriterionResult(
        criterion=Criterion.DET_ONE,
        description=description,
        holds=holds,
        detail=f"P(x) = {poly}",
    )


def sample_points(A: Algebra) -> list[tuple]:
    """Grid {-1, 0, 1}^n when small enough, otherwise basis multiples and seeded random points."""
    settings = get_settings()
    field = A.field
    values = [field.convert(v) for v in (-1, 0, 1)]
    if 3 ** A.dim <= settings.grid_sample_limit:
        return [tuple(p) for p in itertools.product(values, repeat=A.dim)]
    points = []
    for i in range(A.dim):
        for s in (-2, -1, 1, 2):
            points.append(tuple(c * field.convert(s) for c in unit_vector(field, A.dim, i)))
    rng = Random(settings.random_seed)
    for _ in range(64):
        points.append(tuple(field.random_element(rng, 2) for _ in range(A.dim)))
    return points


def _nonvanishing_criterion(A: Algebra) -> CriterionResult:
    points = sample_points(A)
    for x in points:
        if A.field.is_zero(right_det_polynomial(A, x)):
            return CriterionResult(
                criterion=Criterion.NONVANISHING,
                description=f"det(I + R(x)) != 0 on {len(points)} sample points",
                holds=False,
                witness=format_vector(A.field, x),
            )
    return CriterionResult(
        criterion=Criterion.NONVANISHING,
        description=f"det(I + R(x)) != 0 on {len(points)} sample points",
        holds=True,
        conclusive=False,
    )


def _sampled_nilpotent(A: Algebra, description: str) -> CriterionResult:
    for x in sample_points(A):
        if not is_nilpotent(right_operator(A, x)):
            return CriterionResult(
                criterion=Criterion.NILPOTENT,
                description=description + " (sampled)",
                holds=False,
                witness=format_vector(A.field, x),
            )
    return CriterionResult(
        criterion=Criterion.NILPOTENT, description=description + " (sampled)", holds=True, conclusive=False
    )


def _sampled_det(A: Algebra, description: str) -> CriterionResult:
    for x in sample_points(A):
        if not A.field.eq(right_det_polynomial(A, x), A.field.one):
            return CriterionResult(
                criterion=Criterion.DET_ONE,
                description=description + " (sampled)",
                holds=False,
                witness=format_vector(A.field, x),
            )
    return CriterionResult(
        criterion=Criterion.DET_ONE, description=description + " (sampled)", holds=True, conclusive=False
    )


def check_all_criteria(A: Algebra) -> CompletenessReport:
    """Evaluate criteria (a)-(d); the verdict follows (d).

    Raises:
        NotLeftSymmetric: If A fails the left-symmetry check
    """
    _require_left_symmetric(A)
    d = _trace_criterion(A)
    criteria = [_nilpotent_criterion(A), _det_criterion(A), _nonvanishing_criterion(A), d]
    report = CompletenessReport(
        algebra=A.name,
        verdict=d.holds,
        criteria=criteria,
        witness=d.witness,
        witness_label=_label_of(A, d.witness),
    )
    if not report.consistent():
        get_tracer().warning(f"Completeness criteria disagree on {A.name}")
    get_tracer().trace(
        TraceEvent.COMPLETENESS_CHECK,
        ok=report.verdict,
        preview=A.name,
        consistent=report.consistent(),
    )
    return report
