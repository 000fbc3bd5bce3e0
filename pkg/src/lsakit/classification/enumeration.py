"""Enumeration of left root graphs that can belong to a simple complete algebra."""

import itertools
from collections.abc import Iterable
from dataclasses import dataclass, field

import sympy

from ..graphs import (
    RootGraph,
    as_vertex,
    check_properties,
    check_simple_properties,
    dual_graph,
    vertex_key,
    vertex_label,
)
from ..tracing import TraceEvent, get_tracer
from .templates import VertexTemplate, templates_for

Edge = tuple[sympy.Expr, sympy.Expr]
ZERO = sympy.Integer(0)


@dataclass(frozen=True)
class GraphCandidate:
    """Left graph without its loops; every nonzero vertex carries a loop implicitly."""

    template: str
    vertices: tuple[sympy.Expr, ...]
    edges: frozenset[Edge]
    parameters: tuple[sympy.Symbol, ...] = ()
    excluded: tuple[sympy.Expr, ...] = ()
    flags: dict[str, bool] = field(default_factory=dict, compare=False)

    @property
    def dim(self) -> int:
        return len(self.vertices)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges, key=lambda e: (vertex_key(e[0]), vertex_key(e[1])))

    def left_graph(self) -> RootGraph:
        loops = [(v, v) for v in self.vertices if v != ZERO]
        return RootGraph.create("left", self.vertices, list(self.edges) + loops)

    def right_graph(self) -> RootGraph:
        return dual_graph(self.left_graph())

    def label(self) -> str:
        edges = ", ".join(f"{vertex_label(a)}->{vertex_label(b)}" for a, b in self.sorted_edges())
        verts = ", ".join(vertex_label(v) for v in self.vertices)
        return f"{{{verts}}}: {edges}"


def allowed_edges(vertices: Iterable[sympy.Expr]) -> list[Edge]:
    """Non-loop edges a -> b allowed by l2 and l3: a != 0 and b - a a vertex."""
    verts = tuple(vertices)
    present = set(verts)
    edges = []
    for a in verts:
        if a == ZERO:
            continue
        for b in verts:
            if b != a and as_vertex(b - a) in present:
                edges.append((a, b))
    return sorted(edges, key=lambda e: (vertex_key(e[0]), vertex_key(e[1])))


def _edge_units(vertices: tuple[sympy.Expr, ...]) -> list[tuple[Edge, ...]]:
    """Edges grouped so l4 holds by construction: a -> 0 travels with -a -> 0."""
    edges = allowed_edges(vertices)
    available = set(edges)
    units: list[tuple[Edge, ...]] = []
    seen: set[Edge] = set()
    for a, b in edges:
        if (a, b) in seen:
            continue
        if b == ZERO:
            partner = (as_vertex(-a), ZERO)
            if partner not in available:
                continue
            unit = tuple(sorted({(a, b), partner}, key=lambda e: vertex_key(e[0])))
        else:
            unit = ((a, b),)
        seen.update(unit)
        units.append(unit)
    return units


def _quick_reject(vertices: tuple[sympy.Expr, ...], edges: set[Edge]) -> bool:
    """Cheap necessary conditions: a symmetric pair into 0 (s3), displacements cover the roots (s1)."""
    if not any(b == ZERO for _, b in edges):
        return True
    shifts = {as_vertex(b - a) for a, b in edges}
    return any(v != ZERO and v not in shifts for v in vertices)


def _orientation_key(vertices: tuple[sympy.Expr, ...], edges: Iterable[Edge]) -> tuple:
    """Prefer the variant whose vertex -1 has the most out-edges, then the smallest edge list."""
    edges = list(edges)
    minus_one = as_vertex(-1)
    out = sum(1 for a, _ in edges if a == minus_one) if minus_one in vertices else 0
    ordered = sorted((vertex_key(a), vertex_key(b)) for a, b in edges)
    return (-out, ordered)


def canonical_edges(template: VertexTemplate, edges: Iterable[Edge]) -> frozenset[Edge]:
    """Representative of the edge set under the template's symmetries."""
    edges = list(edges)
    variants = []
    for sigma in template.symmetries or ({v: v for v in template.vertices},):
        mapped = frozenset((sigma[a], sigma[b]) for a, b in edges)
        variants.append((_orientation_key(template.vertices, mapped), mapped))
    return min(variants, key=lambda item: item[0])[1]


def passes_properties(candidate: GraphCandidate) -> dict[str, bool] | None:
    """Flags of every graph property, or None as soon as one family of them fails."""
    left = candidate.left_graph()
    right = dual_graph(left)
    flags: dict[str, bool] = {}
    for check in (
        lambda: check_properties(left),
        lambda: check_properties(right),
        lambda: check_simple_properties(left, right),
    ):
        report = check()
        flags.update({r.name: r.holds for r in report.results})
        if not report.all_hold():
            return None
    return flags


def enumerate_template(template: VertexTemplate) -> list[GraphCandidate]:
    """Every edge set on the template's vertices passing l1-l6, r1-r5 and s1-s3, up to symmetry."""
    tracer = get_tracer()
    units = _edge_units(template.vertices)
    found: dict[frozenset[Edge], GraphCandidate] = {}
    checked: set[frozenset[Edge]] = set()
    for choice in itertools.product((False, True), repeat=len(units)):
        edges = {e for take, unit in zip(choice, units) if take for e in unit}
        if _quick_reject(template.vertices, edges):
            continue
        key = canonical_edges(template, edges)
        if key in checked:
            continue
        checked.add(key)
        candidate = GraphCandidate(
            template.name, template.vertices, key, template.parameters, template.excluded
        )
        flags = passes_properties(candidate)
        if flags is None:
            continue
        found[key] = GraphCandidate(
            template.name, template.vertices, key, template.parameters, template.excluded, flags
        )
        tracer.trace(
            TraceEvent.ENUMERATE_CANDIDATE, preview=template.name, edges=found[key].label()
        )
    tracer.debug(f"{template.name}: {len(units)} edge units, {len(checked)} graphs checked, {len(found)} kept")
    return sorted(found.values(), key=lambda c: _orientation_key(c.vertices, c.edges))


def enumerate_graphs(dim: int, vertex_templates: Iterable[VertexTemplate] | None = None) -> list[GraphCandidate]:
    """Candidates over the given templates (default: every template of the dimension).

    Raises:
        BadParameters: If dim < 2
        TemplateExhausted: If no template covers the dimension
    """
    templates = list(vertex_templates) if vertex_templates is not None else templates_for(dim)
    out: list[GraphCandidate] = []
    for template in templates:
        if template.dim == dim:
            out.extend(enumerate_template(template))
    return out
