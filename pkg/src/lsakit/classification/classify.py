"""End-to-end classification of simple complete algebras with one-dimensional root parts.

Enumerate candidate graphs, solve their structure constants, verify a
representative of each solution family, and merge the lambda = 2 solutions
into the projective-line family.
"""

import asyncio
from collections.abc import Callable, Sequence
from typing import TypeVar

import sympy

from ..algebra import Algebra, is_left_symmetric
from ..completeness import is_complete
from ..config import get_settings
from ..contracts.reports import ClassificationReport, FamilyModel
from ..decomposition import make_canonical
from ..errors import LsaError, SolverIncomplete
from ..graphs import (
    as_vertex,
    check_properties,
    check_simple_properties,
    graph_from_structure,
    vertex_label,
)
from ..ideals import is_simple
from ..tracing import TraceEvent, get_tracer
from .catalog import auslander3, family5, series, simple4
from .enumeration import GraphCandidate, enumerate_template
from .isomorphism import diagonal_isomorphism, find_diagonal_isomorphism, iso_family5, projective_points
from .solver import StructureFamily, solve_structure_constants
from .templates import MAX_TEMPLATE_DIM, templates_for

T = TypeVar("T")

COMPLETE_LIST_DIM = 5
LAMBDA_TWO_ROOTS = frozenset(as_vertex(v) for v in (-2, -1, 0, 1, 2))
LAMBDA_TWO_EDGES = frozenset(
    (as_vertex(a), as_vertex(b))
    for a, b in ((-2, 0), (-1, 0), (1, 0), (2, 0), (-1, 1), (2, 1), (-1, -2))
)
LAMBDA_TWO_PRODUCTS = (
    "e-2 e2 = e0",
    "e-1 e1 = e0",
    "e1 e-1 = e0",
    "e2 e-2 = e0",
    "e2 e-1 = (alpha) e1",
    "e-1 e2 = (beta) e1",
    "e-1 e-1 = (gamma) e-2",
)


async def _bounded(jobs: Sequence[Callable[[], T]], workers: int) -> list[T]:
    """Run blocking jobs in threads, at most ``workers`` at a time, results in job order."""
    semaphore = asyncio.Semaphore(workers)

    async def run(job: Callable[[], T]) -> T:
        async with semaphore:
            return await asyncio.to_thread(job)

    return list(await asyncio.gather(*(run(job) for job in jobs)))


def verify_algebra(A: Algebra) -> dict[str, bool]:
    """Left symmetry, completeness, one-dimensional canonical parts, graph properties and simplicity."""
    tracer = get_tracer()
    flags = {"left_symmetric": bool(is_left_symmetric(A))}
    flags["complete"] = flags["left_symmetric"] and is_complete(A).verdict
    flags["one_dimensional"] = False
    flags["graph_properties"] = False
    if flags["complete"]:
        try:
            form = make_canonical(A)
            flags["one_dimensional"] = form.decomposition.is_one_dimensional()
            left, right = graph_from_structure(A, form.decomposition)
            flags["graph_properties"] = (
                check_properties(left).all_hold()
                and check_properties(right).all_hold()
                and check_simple_properties(left, right, A).all_hold()
            )
        except LsaError as e:
            tracer.debug(f"Verification of {A.name} stopped: {e}")
    flags["simple"] = is_simple(A).simple
    return flags


def _catalog_algebras(dim: int, family: StructureFamily, values: dict) -> list[tuple[str, Algebra]]:
    out: list[tuple[str, Algebra]] = []
    if dim == 3:
        out.append(("auslander3", auslander3()))
    if dim == 4:
        out.append(("simple4", simple4()))
    if dim == 5 and family.parameters:
        out.append(("family5", family5(values[family.parameters[0]])))
    if dim >= 3:
        out.append((f"series({dim})", series(dim)))
    return out


def catalog_match(A: Algebra, family: StructureFamily, values: dict) -> str | None:
    """Catalog entry isomorphic to A by a diagonal rescaling of the root basis."""
    for name, B in _catalog_algebras(A.dim, family, values):
        if B.basis == A.basis and diagonal_isomorphism(A, B) is not None:
            return name
    return None


def _edges(edges) -> list[list[str]]:
    return [[vertex_label(a), vertex_label(b)] for a, b in edges]


def _family_model(
    name: str, family: StructureFamily, verification: dict[str, bool], catalog: str | None
) -> FamilyModel:
    candidate = family.candidate
    excluded = []
    for p in family.parameters:
        values = sorted({sympy.sstr(x) for x in candidate.excluded + family.excluded})
        excluded.extend(f"{p} != {v}" for v in values)
    return FamilyModel(
        name=name,
        dim=candidate.dim,
        vertices=[vertex_label(v) for v in candidate.vertices],
        edges=_edges(candidate.sorted_edges()),
        parameters=[str(s) for s in family.symbols()],
        constraints=[f"{sympy.sstr(e)} != 0" for e in family.nonzero],
        excluded=excluded,
        products=family.products(),
        verification=verification,
        catalog=catalog,
    )


def _lambda_two_triple(family: StructureFamily) -> tuple[sympy.Expr, sympy.Expr, sympy.Expr]:
    return (family.constant(2, -1), family.constant(-1, 2), family.constant(-1, -1))


def _is_lambda_two(family: StructureFamily) -> bool:
    candidate = family.candidate
    return frozenset(candidate.vertices) == LAMBDA_TWO_ROOTS and candidate.edges <= LAMBDA_TWO_EDGES


def _lambda_two_family(members: list[tuple[StructureFamily, Algebra, dict[str, bool]]]) -> FamilyModel:
    """The projective line of triples (alpha : beta : gamma) with 2 alpha = beta + gamma."""
    verification = {
        key: all(flags.get(key, False) for _, _, flags in members)
        for key in ("left_symmetric", "complete", "one_dimensional", "graph_properties", "simple")
    }
    unit_pairs = all(
        sympy.simplify(f.constant(a, -a) - 1) == 0 for f, _, _ in members for a in (-2, -1, 1, 2)
    )
    charts, on_line, cross_checked = [], True, True
    present = {f.candidate.edges for f, _, _ in members}
    for family, A, _ in members:
        a, b, g = _lambda_two_triple(family)
        on_line = on_line and sympy.expand(2 * a - b - g) == 0
        charts.append(f"({sympy.sstr(a)} : {sympy.sstr(b)} : {sympy.sstr(g)}) on {family.candidate.label()}")
        sample = tuple(sympy.sympify(x).subs(family.sample_values()) for x in (a, b, g))
        scaled = tuple(2 * x for x in sample)
        try:
            cross_checked = cross_checked and (
                iso_family5(sample, scaled) and find_diagonal_isomorphism(sample, scaled) is not None
            )
        except LsaError:
            cross_checked = False
    points = []
    for point in projective_points():
        edges = LAMBDA_TWO_EDGES - {tuple(as_vertex(v) for v in point.dropped_edge)}
        found = frozenset(edges) in present
        verification[f"point {point.name}"] = found
        a, b, g = (sympy.sstr(x) for x in point.point)
        drop = "->".join(str(v) for v in point.dropped_edge)
        points.append(f"{point.name}: ({a} : {b} : {g}) drops {drop} ({point.product})")
    base = frozenset(e for e in LAMBDA_TWO_EDGES if e[1] == 0)
    if base in present:
        points.append("(0 : 0 : 0): family5(2), no extra edges")
    verification["unit_pairs"] = unit_pairs
    verification["constraint"] = on_line
    verification["collinear_iso"] = cross_checked
    return FamilyModel(
        name="family5_mod",
        dim=5,
        vertices=[vertex_label(as_vertex(v)) for v in (-2, -1, 0, 1, 2)],
        edges=_edges(sorted(LAMBDA_TWO_EDGES, key=lambda e: (float(e[0]), float(e[1])))),
        parameters=["alpha", "beta", "gamma"],
        constraints=["2*alpha = beta + gamma", "(alpha : beta : gamma) up to a common factor"],
        products=list(LAMBDA_TWO_PRODUCTS),
        verification=verification,
        catalog="family5_mod",
        points=points,
        members=charts,
    )


def _solve(candidate: GraphCandidate) -> tuple[list[StructureFamily], list[str]]:
    try:
        return solve_structure_constants(candidate), []
    except SolverIncomplete as e:
        unsolved = [
            f"{candidate.label()} [{' & '.join(b.splits) or 'no split'}]: {', '.join(b.equations)}"
            for b in e.branches
        ]
        return list(e.details.get("families", [])), unsolved


def _verify(family: StructureFamily) -> tuple[Algebra, dict[str, bool], str | None]:
    values = family.sample_values()
    A = family.instantiate(values)
    flags = verify_algebra(A)
    return A, flags, catalog_match(A, family, values)


async def classify_async(dim: int, workers: int | None = None) -> ClassificationReport:
    """Classification report for one dimension.

    Raises:
        BadParameters: If dim < 2
        TemplateExhausted: Above the largest dimension the templates cover
    """
    tracer = get_tracer()
    workers = workers or get_settings().classify_workers
    templates = templates_for(dim)
    per_template = await _bounded([lambda t=t: enumerate_template(t) for t in templates], workers)
    candidates = [c for found in per_template for c in found]
    graphs = [f"{c.template}: {c.label()}" for c in candidates]
    tracer.info(f"Dimension {dim}: {len(candidates)} candidate graphs")

    if dim > COMPLETE_LIST_DIM:
        return ClassificationReport(
            dim=dim,
            complete_list=False,
            banner=(
                f"enumeration only for dimension {dim} (at most {MAX_TEMPLATE_DIM}): "
                "no structure constants solved, no completeness-of-list claim"
            ),
            candidates=len(candidates),
            graphs=graphs,
        )

    solved = await _bounded([lambda c=c: _solve(c) for c in candidates], workers)
    families = [f for found, _ in solved for f in found]
    unsolved = [u for _, branch in solved for u in branch]
    checked = await _bounded([lambda f=f: _verify(f) for f in families], workers)

    models: list[FamilyModel] = []
    rejected: list[str] = []
    lambda_two: list[tuple[StructureFamily, Algebra, dict[str, bool]]] = []
    counters: dict[str, int] = {}
    for family, (A, flags, catalog) in zip(families, checked):
        if not all(flags.values()):
            failed = ", ".join(k for k, v in flags.items() if not v)
            rejected.append(f"{family.candidate.label()}: {'; '.join(family.products())} fails {failed}")
            tracer.warning(f"Rejected solution on {family.candidate.label()}: {failed}")
            continue
        if _is_lambda_two(family):
            lambda_two.append((family, A, flags))
            continue
        counters[family.candidate.template] = counters.get(family.candidate.template, 0) + 1
        name = catalog or f"{family.candidate.template}#{counters[family.candidate.template]}"
        models.append(_family_model(name, family, flags, catalog))
    if lambda_two:
        models.append(_lambda_two_family(lambda_two))
    for model in models:
        tracer.trace(
            TraceEvent.CLASSIFY_FAMILY,
            ok=all(model.verification.values()),
            preview=model.name,
            dim=dim,
            parameters=model.parameters or None,
        )

    return ClassificationReport(
        dim=dim,
        complete_list=not unsolved,
        candidates=len(candidates),
        graphs=graphs,
        families=models,
        unsolved=unsolved,
        rejected=rejected,
    )


def classify(dim: int, workers: int | None = None) -> ClassificationReport:
    """Blocking wrapper around ``classify_async`` for callers without an event loop."""
    return asyncio.run(classify_async(dim, workers))


def family_names(report: ClassificationReport) -> list[str]:
    return [f.name for f in report.families]