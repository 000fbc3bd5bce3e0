"""Spectral primitives: eigenvalues, generalized eigenspaces, Jordan-Chevalley, exponentials."""

import math

import numpy as np
import sympy
from scipy.linalg import expm

from ..errors import DimensionMismatch, NotNilpotent, NumericFallback
from ..tracing import TraceEvent, get_tracer
from .matrix import Matrix, inverse
from .scalar import Scalar, ScalarField
from .subspace import Subspace

t = sympy.Symbol("t")


def _require_square(A: Matrix) -> None:
    if not A.is_square:
        raise DimensionMismatch(f"Square matrix required, got {A.nrows}x{A.ncols}")


def characteristic_polynomial(A: Matrix) -> sympy.Expr:
    """det(tI - A) as a sympy expression in ``t``."""
    _require_square(A)
    if A.field.is_exact:
        coeffs = A.to_domain_matrix().charpoly()
        n = len(coeffs) - 1
        return sympy.Add(*(A.field.to_sympy(c) * t ** (n - k) for k, c in enumerate(coeffs)))
    coeffs = np.poly(A.to_numpy()) if A.nrows else np.array([1.0])
    n = len(coeffs) - 1
    return sympy.Add(*(sympy.sympify(complex(c)) * t ** (n - k) for k, c in enumerate(coeffs)))


def determinant(A: Matrix) -> Scalar:
    _require_square(A)
    if A.field.is_exact:
        return A.to_domain_matrix().det()
    return complex(np.linalg.det(A.to_numpy())) if A.nrows else A.field.one


def _cluster_tolerance(field: ScalarField, values: np.ndarray) -> float:
    scale = max([1.0] + [abs(v) for v in values])
    return math.sqrt(field.eps) * scale


def eigenvalue_clusters(A: Matrix) -> list[tuple[Scalar, int]]:
    """Distinct eigenvalues with algebraic multiplicities, sorted by (re, im).

    Raises:
        NumericFallback: In exact mode, when an irreducible factor of degree > 1
            remains after factoring over Q(i)
    """
    _require_square(A)
    field = A.field
    if A.nrows == 0:
        return []
    if field.is_exact:
        chi = characteristic_polynomial(A)
        _, factors = sympy.factor_list(chi, t, extension=sympy.I)
        found: list[tuple[Scalar, int]] = []
        for factor, mult in factors:
            degree = sympy.degree(factor, t)
            if degree == 0:
                continue
            if degree > 1:
                get_tracer().trace(TraceEvent.NUMERIC_FALLBACK, ok=False, preview=str(chi))
                raise NumericFallback(
                    f"Characteristic polynomial has a factor irreducible over Q(i): {factor}",
                    polynomial=chi,
                )
            lead, const = sympy.Poly(factor, t).all_coeffs()
            found.append((-field.from_sympy(const) / field.from_sympy(lead), mult))
        found.sort(key=lambda item: field.sort_key(item[0]))
        return found

    values = np.linalg.eigvals(A.to_numpy())
    tol = _cluster_tolerance(field, values)
    clusters: list[list[complex]] = []
    for v in sorted(values, key=lambda z: (z.real, z.imag)):
        for cluster in clusters:
            if abs(np.mean(cluster) - v) <= tol:
                cluster.append(v)
                break
        else:
            clusters.append([v])
    result = [(complex(np.mean(c)), len(c)) for c in clusters]
    result.sort(key=lambda item: field.sort_key(item[0]))
    return result


def eigenvalues_in_field(A: Matrix) -> list[Scalar]:
    """Distinct eigenvalues of ``A`` lying in the scalar field."""
    return [value for value, _ in eigenvalue_clusters(A)]


def generalized_eigenspace(A: Matrix, value: Scalar) -> Subspace:
    """Kernel of (A - value I)^n.

    Numeric mode takes the null space of the right size from an SVD, the
    size being the multiplicity of the eigenvalue cluster around ``value``.
    """
    _require_square(A)
    field = A.field
    n = A.nrows
    shifted = A - Matrix.identity(field, n).scale(field.convert(value))
    if field.is_exact:
        return Subspace.kernel_of(shifted.power(n))

    values = np.linalg.eigvals(A.to_numpy()) if n else np.array([])
    tol = _cluster_tolerance(field, values)
    mult = int(sum(1 for v in values if abs(v - value) <= tol))
    if mult == 0:
        return Subspace.zero(field, n)
    _, _, vh = np.linalg.svd(np.linalg.matrix_power(shifted.to_numpy(), n))
    null_rows = vh[n - mult :].conj()
    return Subspace.span(field, n, ([complex(a) for a in row] for row in null_rows))


def is_nilpotent(A: Matrix) -> bool:
    _require_square(A)
    return A.power(A.nrows).is_zero()


def _poly_at(coeffs: list[Scalar], A: Matrix) -> Matrix:
    """Horner evaluation of a polynomial, highest coefficient first."""
    field = A.field
    ident = Matrix.identity(field, A.nrows)
    result = Matrix.zeros(field, A.nrows)
    for c in coeffs:
        result = result @ A + ident.scale(c)
    return result


def jordan_chevalley_semisimple(A: Matrix) -> Matrix:
    """Semisimple part S of A: S commutes with A, A - S is nilpotent, S is a polynomial in A.

    Exact mode runs Newton's iteration S <- S - p(S) p'(S)^-1 on the squarefree
    part p of the characteristic polynomial, so no eigenvalue is ever computed.
    """
    _require_square(A)
    field = A.field
    n = A.nrows
    if n == 0:
        return A
    if field.is_exact:
        chi = characteristic_polynomial(A)
        p = sympy.Poly(sympy.sqf_part(chi, t, extension=sympy.I), t, extension=sympy.I)
        p_coeffs = [field.from_sympy(c) for c in p.all_coeffs()]
        dp_coeffs = [field.from_sympy(c) for c in p.diff(t).all_coeffs()]
        S = A
        for _ in range(n + 1):
            residual = _poly_at(p_coeffs, S)
            if residual.is_zero():
                return S
            S = S - residual @ inverse(_poly_at(dp_coeffs, S))
        return S

    columns: list[list[complex]] = []
    diagonal: list[complex] = []
    for value, _ in eigenvalue_clusters(A):
        space = generalized_eigenspace(A, value)
        for v in space.basis:
            columns.append([complex(a) for a in v])
            diagonal.append(complex(value))
    if len(columns) != n:
        raise NumericFallback("Generalized eigenspaces do not span; matrix is ill-conditioned")
    B = np.array(columns, dtype=complex).T
    S = B @ np.diag(diagonal) @ np.linalg.inv(B)
    return Matrix.from_numpy(field, S)


def exp_nilpotent(A: Matrix) -> Matrix:
    """exp(A) as the finite sum of A^k / k!.

    Raises:
        NotNilpotent: If A^n != 0
    """
    _require_square(A)
    if not is_nilpotent(A):
        raise NotNilpotent("Exponent is not nilpotent; the series does not terminate")
    field = A.field
    ident = Matrix.identity(field, A.nrows)
    total = ident
    term = ident
    for k in range(1, A.nrows):
        term = (term @ A).scale(field.one / field.convert(k))
        if term.is_zero():
            break
        total = total + term
    return total


def exp_matrix(A: Matrix) -> Matrix:
    """exp(A): exact for nilpotent A, scipy's ``expm`` in numeric mode."""
    if A.field.is_exact:
        return exp_nilpotent(A)
    return Matrix.from_numpy(A.field, expm(A.to_numpy()))
