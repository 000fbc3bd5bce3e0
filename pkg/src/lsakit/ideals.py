"""Two-sided ideals and simplicity."""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from random import Random

from .algebra import Algebra, multiply
from .config import get_settings
from .contracts.reports import SimplicityReport
from .decomposition import make_canonical
from .errors import LsaError
from .field import Matrix, Scalar, Subspace, Vector
from .tracing import TraceEvent, get_tracer


@dataclass(frozen=True)
class Ideal:
    """Two-sided ideal with the vectors it was generated from."""

    subspace: Subspace
    generators: tuple[Vector, ...] = ()

    @property
    def dim(self) -> int:
        return self.subspace.dim

    def is_proper(self) -> bool:
        return not self.subspace.is_zero() and not self.subspace.is_full()


def _products(A: Algebra, S: Subspace) -> Iterable[Vector]:
    for i in range(A.dim):
        e = A.basis_vector(i)
        for v in S.basis:
            yield multiply(A, e, v)
            yield multiply(A, v, e)


def ideal_closure(A: Algebra, generators: Iterable[Sequence[Scalar]]) -> Ideal:
    """Least subspace containing the generators and closed under x(-) and (-)x.

    The span grows by one round of basis products at a time and stops when
    its dimension stalls, which takes at most dim A rounds.
    """
    gens = tuple(tuple(g) for g in generators)
    S = Subspace.span(A.field, A.dim, gens)
    rounds = 0
    while True:
        grown = Subspace.span(A.field, A.dim, list(S.basis) + list(_products(A, S)))
        if grown.dim == S.dim:
            break
        S = grown
        rounds += 1
    get_tracer().trace(TraceEvent.IDEAL_CLOSURE, preview=A.name, dim=S.dim, rounds=rounds)
    return Ideal(S, gens)


def is_ideal(A: Algebra, S: Subspace) -> bool:
    return all(S.contains(w) for w in _products(A, S))


def l_kernel(A: Algebra) -> Subspace:
    """{x : L(x) = 0}; always a two-sided ideal."""
    columns = [tuple(a for j in range(A.dim) for a in A.product(i, j)) for i in range(A.dim)]
    if not columns:
        return Subspace.zero(A.field, 0)
    return Subspace.kernel_of(Matrix.from_columns(A.field, columns, A.dim * A.dim))


def _root_vectors(A: Algebra) -> tuple[list[Vector], bool]:
    """Root vectors of the canonical decomposition and whether they decide simplicity.

    They decide it when the decomposition is one-dimensional: the roots are then
    pairwise distinct, every ideal is spanned by root vectors, and a nonzero
    ideal contains one of them.
    """
    try:
        form = make_canonical(A)
    except LsaError as e:
        get_tracer().debug(f"No canonical decomposition for {A.name}: {e}")
        return [], False
    decomposition = form.decomposition
    vectors = [b for p in decomposition.parts for b in p.space.basis]
    decides = form.cartan.dim == 1 and decomposition.is_one_dimensional()
    return vectors, decides


def _random_vectors(A: Algebra, count: int) -> list[Vector]:
    rng = Random(get_settings().random_seed)
    return [tuple(A.field.random_element(rng) for _ in range(A.dim)) for _ in range(count)]


def is_simple(A: Algebra, samples: int = 8) -> SimplicityReport:
    """Search for a proper ideal among closures of single generators.

    With a one-dimensional canonical decomposition the closures of the root
    vectors decide the question exactly. Otherwise basis vectors, root vectors
    and ``samples`` pseudo-random vectors are tried; a proper closure is a
    certificate either way, while "simple" is only as good as the generators.
    """
    tracer = get_tracer()
    roots, decides = _root_vectors(A) if A.dim > 1 else ([], True)
    if decides:
        generators = roots
        level = "exact"
    else:
        basis = [A.basis_vector(i) for i in range(A.dim)]
        generators = basis + roots + _random_vectors(A, samples)
        level = "verified-generators"
    tested = 0
    for g in generators:
        if all(A.field.is_zero(a) for a in g):
            continue
        tested += 1
        ideal = ideal_closure(A, [g])
        if ideal.is_proper():
            tracer.info(f"{A.name} has a proper ideal of dimension {ideal.dim}")
            return SimplicityReport(
                algebra=A.name,
                simple=False,
                level="exact",
                witness=ideal.subspace.to_strings(),
                generators_tested=tested,
            )
    return SimplicityReport(algebra=A.name, simple=A.dim > 0, level=level, generators_tested=tested)
