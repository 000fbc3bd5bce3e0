"""Solvability and Cartan subalgebras of the commutator Lie algebra."""

from collections.abc import Iterator, Sequence

from ..algebra import Algebra, ad_operator, lie_bracket
from ..config import get_settings
from ..errors import DimensionMismatch, NotCartan, NotSolvable, SeedNotRegular
from ..field import Matrix, Scalar, Subspace, Vector, generalized_eigenspace, kernel, vec_add
from ..tracing import TraceEvent, get_tracer


def bracket_span(A: Algebra, S: Subspace, T: Subspace) -> Subspace:
    """span{[s, t] : s in S, t in T}."""
    return Subspace.span(A.field, A.dim, (lie_bracket(A, s, t) for s in S.basis for t in T.basis))


def derived_series(A: Algebra) -> list[Subspace]:
    """g, [g, g], [[g, g], [g, g]], ... up to the first repeated term."""
    series = [Subspace.full(A.field, A.dim)]
    while not series[-1].is_zero():
        nxt = bracket_span(A, series[-1], series[-1])
        if nxt.dim == series[-1].dim:
            break
        series.append(nxt)
    return series


def is_solvable(A: Algebra) -> bool:
    return derived_series(A)[-1].is_zero()


def lower_central_series(A: Algebra, S: Subspace | None = None) -> list[Subspace]:
    """S, [S, S], [S, [S, S]], ... inside the subalgebra S (default g)."""
    S = S if S is not None else Subspace.full(A.field, A.dim)
    series = [S]
    while not series[-1].is_zero():
        nxt = bracket_span(A, S, series[-1])
        if nxt.dim == series[-1].dim:
            break
        series.append(nxt)
    return series


def is_nilpotent_subalgebra(A: Algebra, S: Subspace) -> bool:
    return lower_central_series(A, S)[-1].is_zero()


def normalizer(A: Algebra, S: Subspace) -> Subspace:
    """{x : [x, S] in S}, the kernel of x -> residuals of [x, s] modulo S."""
    rows: list[Vector] = []
    for s in S.basis:
        columns = [S.residual(lie_bracket(A, A.basis_vector(i), s)) for i in range(A.dim)]
        rows.extend(Matrix.from_columns(A.field, columns, A.dim).rows)
    if not rows:
        return Subspace.full(A.field, A.dim)
    return Subspace.span(A.field, A.dim, kernel(Matrix.from_rows(A.field, rows, A.dim)))


def is_cartan(A: Algebra, S: Subspace) -> bool:
    """Nilpotent and self-normalizing."""
    if S.ambient != A.dim:
        raise DimensionMismatch(f"Subspace of F^{S.ambient} in algebra of dimension {A.dim}")
    for u in S.basis:
        for v in S.basis:
            if not S.contains(lie_bracket(A, u, v)):
                return False
    return is_nilpotent_subalgebra(A, S) and normalizer(A, S) == S


def _candidates(A: Algebra, seed: Vector, height: int) -> Iterator[Vector]:
    """Seed first, then seed plus integer offsets of increasing coefficient height."""
    field = A.field
    yield seed
    for h in range(1, height + 1):
        for i in range(A.dim):
            offset = tuple(field.convert(h) if k == i else field.zero for k in range(A.dim))
            yield vec_add(seed, offset)
        yield vec_add(seed, tuple(field.convert(k % h + 1) for k in range(A.dim)))
        yield vec_add(seed, tuple(field.convert((-1) ** k * (k % (h + 1) + 1)) for k in range(A.dim)))


def cartan_subalgebra(A: Algebra, seed: Sequence[Scalar] | None = None) -> Subspace:
    """Generalized null space of ad(h) for a regular element h.

    The seed is used as is when regular; otherwise it is perturbed along a
    deterministic integer sequence bounded by ``REGULAR_SEARCH_HEIGHT``.

    Raises:
        NotSolvable: If the derived series does not reach zero
        SeedNotRegular: If no candidate yields a nilpotent generalized null space
    """
    tracer = get_tracer()
    if not is_solvable(A):
        raise NotSolvable(f"Lie algebra of {A.name} is not solvable")
    if A.dim == 0:
        return Subspace.zero(A.field, 0)
    start = A.element(seed) if seed is not None else A.zero()
    height = get_settings().regular_search_height
    seen: set[tuple] = set()
    for attempt, h in enumerate(_candidates(A, start, height)):
        key = tuple(A.field.sort_key(c) for c in h)
        if key in seen:
            continue
        seen.add(key)
        K = generalized_eigenspace(ad_operator(A, h), A.field.zero)
        if is_nilpotent_subalgebra(A, K) and normalizer(A, K) == K:
            if seed is not None and attempt:
                tracer.info(f"Seed {A.format(start)} is not regular; using {A.format(h)}")
            tracer.trace(TraceEvent.CARTAN_FOUND, ok=True, preview=A.name, element=A.format(h), dim=K.dim)
            return K
    tracer.trace(TraceEvent.CARTAN_FOUND, ok=False, preview=A.name)
    raise SeedNotRegular(
        f"No regular element found for {A.name} up to coefficient height {height}",
        seed=A.format(start),
    )


def require_cartan(A: Algebra, h: Subspace) -> None:
    """Raises NotCartan unless h is a Cartan subalgebra of A."""
    if not is_cartan(A, h):
        raise NotCartan(f"Subspace of dimension {h.dim} is not a Cartan subalgebra of {A.name}")
