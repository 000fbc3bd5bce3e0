"""The canonical decomposition of a complete left-symmetric algebra.

A Cartan subalgebra h is canonical when the ad- and L-root decompositions
with respect to h coincide, equivalently when the unit of the unital
extension lies in the L-root-0 part of g1. Every complete algebra has exactly
one canonical Cartan subalgebra; ``make_canonical`` finds it by transporting
the zero-root point of an arbitrary Cartan subalgebra to the unit.
"""

from collections.abc import Sequence
from dataclasses import dataclass

from ..algebra import (
    Algebra,
    UnitalExtension,
    ad_operator,
    left_operator,
    multiply,
    right_operator,
    unital_extension,
)
from ..completeness.criteria import is_complete
from ..config import get_settings
from ..contracts.reports import CanonicalReport
from ..errors import (
    BadParameters,
    DimensionMismatch,
    MaxIterations,
    NotCanonical,
    NotComplete,
    NotNilpotent,
)
from ..field import (
    Matrix,
    Scalar,
    Subspace,
    Vector,
    exp_matrix,
    format_vector,
    jordan_chevalley_semisimple,
    linear_combination,
    solve_linear,
    vec_add,
    vec_eq,
    vec_is_zero,
    vec_sub,
    zero_vector,
)
from ..tracing import TraceEvent, get_tracer
from .cartan import cartan_subalgebra
from .roots import (
    RootDecomposition,
    decomposition_model,
    grading_check,
    root_decomposition,
    simultaneous_decomposition,
)


@dataclass(frozen=True)
class TransportWord:
    """Group element e^{L(y_1)} ... e^{L(y_k)} of the affine action.

    Factors are elements of g; the last factor acts first.
    """

    factors: tuple[Vector, ...] = ()

    def __len__(self) -> int:
        return len(self.factors)

    def inverse(self) -> "TransportWord":
        return TransportWord(tuple(tuple(-a for a in y) for y in reversed(self.factors)))

    def then(self, y: Vector) -> "TransportWord":
        """The word that applies this one and then e^{L(y)}."""
        return TransportWord((tuple(y),) + self.factors)


def _extended(E: UnitalExtension, v: Sequence[Scalar]) -> Vector:
    if len(v) == E.base.dim:
        return E.lift(v)
    if len(v) == E.extended.dim:
        return tuple(v)
    raise DimensionMismatch(f"Vector of length {len(v)} fits neither g nor g1")


def apply_word(E: Algebra | UnitalExtension, word: TransportWord, v: Sequence[Scalar]) -> Vector:
    """Action of the word on a vector of g1 (vectors of g are lifted)."""
    E = E if isinstance(E, UnitalExtension) else unital_extension(E)
    out = _extended(E, v)
    for y in reversed(word.factors):
        out = exp_matrix(left_operator(E.extended, E.lift(y))).apply(out)
    return out


def adjoint_word(A: Algebra, word: TransportWord, S: Subspace) -> Subspace:
    """Ad(w)S = e^{ad y_1} ... e^{ad y_k} S."""
    out = S
    for y in reversed(word.factors):
        out = out.image(exp_matrix(ad_operator(A, y)))
    return out


def _require_complete(A: Algebra) -> None:
    report = is_complete(A)
    if not report.verdict:
        raise NotComplete(
            f"{A.name} is not complete; witness {report.witness_label}", witness=report.witness
        )


def transport_to_unit(E: Algebra | UnitalExtension, x: Sequence[Scalar]) -> TransportWord:
    """Word moving the point x = 1 + u of g1 to the unit.

    Each step solves (I + R(u)) y = -u and moves u to e^{L(y)}(1 + u) - 1.
    Exact mode needs every step nilpotent and reaches u = 0 exactly.

    Raises:
        NotComplete: If the base algebra is not complete
        BadParameters: If x is not of the form 1 + u
        NotNilpotent: In exact mode, when a step has a non-nilpotent L(y)
        MaxIterations: When u has not vanished after MAX_TRANSPORT_ITERATIONS steps
    """
    E = E if isinstance(E, UnitalExtension) else unital_extension(E)
    A = E.base
    field = A.field
    _require_complete(A)
    point = _extended(E, x)
    if not field.eq(point[E.unit_index], field.one):
        raise BadParameters("Transport starts from a point of 1 + g")
    tracer = get_tracer()
    u = E.project(point)
    word = TransportWord()
    limit = get_settings().max_transport_iterations
    for step in range(limit + 1):
        if vec_is_zero(field, u):
            return word
        if step == limit:
            break
        M = Matrix.identity(field, A.dim) + right_operator(A, u)
        y = solve_linear(M, tuple(-a for a in u))
        if y is None:
            raise NotComplete(f"I + R(u) is singular at u = {A.format(u)}")
        word = word.then(y)
        moved = exp_matrix(left_operator(E.extended, E.lift(y))).apply(E.point(u))
        u = E.project(moved)
        tracer.trace(
            TraceEvent.TRANSPORT_STEP,
            preview=A.name,
            step=step + 1,
            factor=A.format(y),
            residual=max((field.magnitude(a) for a in u), default=0.0),
        )
    raise MaxIterations(f"Transport did not reach the unit in {limit} steps", residual=A.format(u))


def extended_left_decomposition(E: UnitalExtension, h: Subspace) -> RootDecomposition:
    """L1-root decomposition of g1 with respect to h lifted into g1."""
    G = E.extended
    lifted = Subspace.span(G.field, G.dim, (E.lift(b) for b in h.basis))
    ops = [left_operator(G, v) for v in lifted.basis]
    parts = simultaneous_decomposition(G.field, G.dim, ops)
    return RootDecomposition(G, lifted, "L", tuple(parts))


def unit_in_zero_part(A: Algebra, h: Subspace) -> bool:
    """The unit criterion: 1 lies in the L-root-0 part of g1."""
    E = unital_extension(A)
    return extended_left_decomposition(E, h).zero_part().contains(E.unit)


def is_canonical(A: Algebra, h: Subspace) -> bool:
    """ad- and L-root decompositions with respect to h have identical parts.

    For complete algebras the answer is cross-checked against the unit
    criterion; a disagreement is logged.
    """
    by_ad = root_decomposition(A, h, "ad")
    by_left = root_decomposition(A, h, "L")
    canonical = by_ad.same_parts(by_left)
    if is_complete(A).verdict:
        unit = unit_in_zero_part(A, h)
        if unit != canonical:
            get_tracer().warning(
                f"Canonicity tests disagree on {A.name}: parts={canonical} unit={unit}"
            )
    return canonical


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical Cartan subalgebra with the transport that produced it."""

    algebra: Algebra
    initial_cartan: Subspace
    cartan: Subspace
    word: TransportWord
    point: Vector
    rounds: int
    decomposition: RootDecomposition

    def __iter__(self):
        return iter((self.cartan, self.word))


def _unit_offset(A: Algebra, E: UnitalExtension, h: Subspace) -> tuple[RootDecomposition, Vector]:
    """Components of the unit of g1 along the nonzero L-roots of h.

    Raises:
        NotCanonical: If the nonzero-root components leave g
    """
    field = A.field
    extended = extended_left_decomposition(E, h)
    offset = zero_vector(field, E.extended.dim)
    for part, comp in zip(extended.parts, extended.split(E.unit)):
        if not part.is_zero_root(field):
            offset = vec_add(offset, comp)
    if not field.is_zero(offset[E.unit_index]):
        raise NotCanonical("Nonzero L-root parts of g1 leave g")
    return extended, offset


def _round_step(A: Algebra, E: UnitalExtension, h: Subspace) -> Vector | None:
    """Root vector z with e^{ad z} h closer to canonical, or None when h is canonical."""
    field = A.field
    extended, offset = _unit_offset(A, E, h)
    if vec_is_zero(field, offset):
        return None

    def nonzero_projection(v: Vector) -> Vector:
        out = zero_vector(field, E.extended.dim)
        for part, comp in zip(extended.parts, extended.split(v)):
            if not part.is_zero_root(field):
                out = vec_add(out, comp)
        return out

    by_ad = root_decomposition(A, h, "ad")
    basis = [b for p in by_ad.nonzero_parts() for b in p.space.basis]
    if not basis:
        raise NotCanonical(f"No root vectors to move the Cartan subalgebra of {A.name}")
    columns = [nonzero_projection(E.lift(b)) for b in basis]
    coeffs = solve_linear(Matrix.from_columns(field, columns, E.extended.dim), offset)
    if coeffs is None:
        raise NotCanonical(f"Unit offset is not reached by root vectors of {A.name}")
    return linear_combination(field, coeffs, basis, A.dim)


def zero_root_point(A: Algebra, h: Subspace) -> Vector:
    """The point x = 1 - v' of g1, where v' is the nonzero-root part of the unit.

    x lies in the L-root-0 part of g1 with respect to h and in 1 + g.
    """
    E = unital_extension(A)
    _, offset = _unit_offset(A, E, h)
    return vec_sub(E.unit, offset)


def make_canonical(
    A: Algebra, h0: Subspace | None = None, seed: Sequence[Scalar] | None = None
) -> CanonicalForm:
    """Canonical Cartan subalgebra h = Ad(w) h0 and the transport word w.

    The unit of g1 is split along the L-roots of h0; the point x = 1 - v'
    with v' its nonzero-root part lies in the L-root-0 part of g1. The word w
    transporting x to the unit gives h = Ad(w) h0.

    In exact mode a transport step may need a non-nilpotent exponent. The
    construction then falls back to rounds that replace h by e^{ad z} h for a
    root vector z matching the unit offset. The same rounds absorb drift in
    numeric mode.

    Raises:
        NotComplete: If A is not complete
        NotCanonical: If a round has no solution or the result fails the canonicity test
        MaxIterations: After MAX_CANONICAL_ROUNDS rounds
        NumericFallback: If roots leave Q(i) in exact mode
    """
    tracer = get_tracer()
    _require_complete(A)
    E = unital_extension(A)
    start = h0 if h0 is not None else cartan_subalgebra(A, seed)
    h = start
    word = TransportWord()
    rounds = 0
    _, offset = _unit_offset(A, E, start)
    if not vec_is_zero(A.field, offset):
        try:
            word = transport_to_unit(E, vec_sub(E.unit, offset))
        except NotNilpotent as e:
            tracer.warning(
                f"Transport of {A.name} needs a non-nilpotent factor ({e}); refining by rounds"
            )
        else:
            h = adjoint_word(A, word, start)
            rounds = 1
            tracer.trace(
                TraceEvent.CANONICAL_ROUND,
                preview=A.name,
                round=rounds,
                factor=f"{len(word)} factors",
            )
    limit = get_settings().max_canonical_rounds
    while True:
        z = _round_step(A, E, h)
        if z is None:
            break
        if rounds == limit:
            raise MaxIterations(f"Cartan subalgebra of {A.name} not canonical after {limit} rounds")
        rounds += 1
        word = word.then(z)
        h = h.image(exp_matrix(ad_operator(A, z)))
        tracer.trace(TraceEvent.CANONICAL_ROUND, preview=A.name, round=rounds, factor=A.format(z))
    decomposition = root_decomposition(A, h, "L")
    if not is_canonical(A, h):
        raise NotCanonical(f"Refined Cartan subalgebra of {A.name} is not canonical")
    point = apply_word(E, word.inverse(), E.unit)
    tracer.trace(TraceEvent.CANONICAL_DONE, ok=True, preview=A.name, rounds=rounds, word=len(word))
    return CanonicalForm(A, start, h, word, point, rounds, decomposition)


def _require_canonical(A: Algebra, h: Subspace) -> None:
    if not is_canonical(A, h):
        raise NotCanonical(f"Cartan subalgebra is not canonical for {A.name}")


def semisimple_parts_agree(A: Algebra, h: Subspace) -> bool:
    """Semisimple parts of L(x) and ad(x) coincide for every Cartan basis element.

    Raises:
        NotCanonical: If h is not canonical
    """
    _require_canonical(A, h)
    return all(
        jordan_chevalley_semisimple(left_operator(A, x))
        == jordan_chevalley_semisimple(ad_operator(A, x))
        for x in h.basis
    )


def is_derivation(A: Algebra, D: Matrix) -> bool:
    """D(uv) = D(u)v + uD(v) on all basis pairs."""
    e = [A.basis_vector(i) for i in range(A.dim)]
    for u in e:
        for v in e:
            lhs = D.apply(multiply(A, u, v))
            rhs = vec_add(multiply(A, D.apply(u), v), multiply(A, u, D.apply(v)))
            if not vec_eq(A.field, lhs, rhs):
                return False
    return True


def derivation_check(A: Algebra, h: Subspace) -> bool:
    """Semisimple parts of L(x), x in a canonical Cartan basis, are derivations.

    Raises:
        NotCanonical: If h is not canonical
    """
    _require_canonical(A, h)
    return all(is_derivation(A, jordan_chevalley_semisimple(left_operator(A, x))) for x in h.basis)


def canonical_report(form: CanonicalForm) -> CanonicalReport:
    A = form.algebra
    return CanonicalReport(
        algebra=A.name,
        initial_cartan=form.initial_cartan.to_strings(),
        cartan=form.cartan.to_strings(),
        word=[format_vector(A.field, y) for y in form.word.factors],
        point=format_vector(A.field, form.point),
        single_factor=len(form.word) <= 1,
        rounds=form.rounds,
        decomposition=decomposition_model(form.decomposition),
        canonical=True,
        semisimple_parts_agree=semisimple_parts_agree(A, form.cartan),
        derivations=derivation_check(A, form.cartan),
        graded=grading_check(A, form.decomposition),
    )

