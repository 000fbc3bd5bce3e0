"""Root graphs of a one-dimensional canonical decomposition.

In the eigenbasis {e_a} of a one-dimensional canonical decomposition the
product is e_a e_b = c_{a,b} e_{a+b}. The left graph has an edge b -> a+b
for every nonzero c_{a,b}; the right graph has the edge a -> a+b. Vertices
are sympy expressions so graph templates may carry a symbolic root.
"""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from typing import Any, Literal

import networkx as nx
import sympy

from ..algebra import Algebra, multiply
from ..contracts.reports import GraphModel
from ..decomposition import RootDecomposition, make_canonical
from ..errors import BadParameters, NotCanonical, NotOneDimensional
from ..field import Scalar, ScalarField, Vector, vec_is_zero
from ..tracing import TraceEvent, get_tracer

Kind = Literal["left", "right"]
Edge = tuple[sympy.Expr, sympy.Expr]


def as_vertex(value: Any) -> sympy.Expr:
    return sympy.expand(sympy.sympify(value))


def vertex_key(v: sympy.Expr) -> tuple:
    """Numbers by (real, imaginary) part, then symbolic vertices by their printed form."""
    if v.is_number:
        c = complex(v)
        return (0, round(c.real, 12), round(c.imag, 12), "")
    return (1, 0.0, 0.0, sympy.sstr(v))


def vertex_label(v: sympy.Expr) -> str:
    return sympy.sstr(v)


def _edge_key(edge: Edge) -> tuple:
    return (vertex_key(edge[0]), vertex_key(edge[1]))


@dataclass(frozen=True)
class RootGraph:
    """Directed graph on the root set; loops are ordinary edges (a, a)."""

    kind: Kind
    vertices: tuple[sympy.Expr, ...]
    edges: frozenset[Edge]
    coefficients: Mapping[Edge, sympy.Expr] = field(default_factory=dict, compare=False)

    @classmethod
    def create(
        cls,
        kind: Kind,
        vertices: Iterable[Any],
        edges: Iterable[tuple[Any, Any]],
        coefficients: Mapping[tuple[Any, Any], Any] | None = None,
    ) -> "RootGraph":
        """Normalize vertices and edges.

        Raises:
            BadParameters: On an unknown kind or an edge endpoint outside the vertex set
        """
        if kind not in ("left", "right"):
            raise BadParameters(f"Graph kind must be 'left' or 'right', got {kind!r}")
        verts: list[sympy.Expr] = []
        for v in map(as_vertex, vertices):
            if v not in verts:
                verts.append(v)
        verts.sort(key=vertex_key)
        edge_set = frozenset((as_vertex(a), as_vertex(b)) for a, b in edges)
        for a, b in edge_set:
            if a not in verts or b not in verts:
                raise BadParameters(f"Edge {vertex_label(a)} -> {vertex_label(b)} leaves the vertex set")
        coeffs = {
            (as_vertex(a), as_vertex(b)): sympy.sympify(c) for (a, b), c in (coefficients or {}).items()
        }
        return cls(kind, tuple(verts), edge_set, coeffs)

    def has_vertex(self, v: Any) -> bool:
        return as_vertex(v) in self.vertices

    def has_edge(self, a: Any, b: Any) -> bool:
        return (as_vertex(a), as_vertex(b)) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges, key=_edge_key)

    def loops(self) -> list[Edge]:
        return [e for e in self.sorted_edges() if e[0] == e[1]]

    def non_loop_edges(self) -> list[Edge]:
        return [e for e in self.sorted_edges() if e[0] != e[1]]

    def out_edges(self, v: Any) -> list[Edge]:
        v = as_vertex(v)
        return [e for e in self.sorted_edges() if e[0] == v]

    def coefficient(self, a: Any, b: Any) -> sympy.Expr | None:
        """Structure constant carried by the edge, None when unknown."""
        return self.coefficients.get((as_vertex(a), as_vertex(b)))

    def digraph(self, loops: bool = True) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(e for e in self.sorted_edges() if loops or e[0] != e[1])
        return g

    def edge_labels(self) -> list[tuple[str, str]]:
        return [(vertex_label(a), vertex_label(b)) for a, b in self.sorted_edges()]


@dataclass(frozen=True)
class GradedStructure:
    """Structure constants c_{a,b} in the root eigenbasis, keyed by root pairs."""

    vertices: tuple[sympy.Expr, ...]
    constants: Mapping[tuple[sympy.Expr, sympy.Expr], sympy.Expr]
    basis: Mapping[sympy.Expr, Vector]

    def c(self, a: Any, b: Any) -> sympy.Expr:
        return self.constants.get((as_vertex(a), as_vertex(b)), sympy.Integer(0))

    def support(self) -> set[tuple[sympy.Expr, sympy.Expr]]:
        return {k for k, v in self.constants.items() if v != 0}


def root_vertex(field: ScalarField, value: Scalar) -> sympy.Expr:
    """Exact roots map to themselves; numeric roots are rounded to nearby rationals."""
    if field.is_exact:
        return as_vertex(field.to_sympy(value))
    c = complex(value)
    re = sympy.Rational(round(c.real, 8)).limit_denominator(10**8)
    im = sympy.Rational(round(c.imag, 8)).limit_denominator(10**8)
    return as_vertex(re + sympy.I * im)


def graded_structure(A: Algebra, decomposition: RootDecomposition | None = None) -> GradedStructure:
    """Eigenbasis e_a with e_0 the Cartan basis vector, and the constants c_{a,b}.

    Raises:
        NotOneDimensional: If some part or the Cartan subalgebra is not one-dimensional
        NotCanonical: If the parts are not graded by root addition or R(e_0) != 0
    """
    if decomposition is None:
        decomposition = make_canonical(A).decomposition
    field = A.field
    if A.dim and (decomposition.cartan.dim != 1 or not decomposition.is_one_dimensional()):
        raise NotOneDimensional(f"Canonical decomposition of {A.name} is not one-dimensional")
    tracer = get_tracer()
    basis: dict[sympy.Expr, Vector] = {}
    for part in decomposition.parts:
        v = root_vertex(field, part.root[0])
        if v in basis:
            tracer.warning(f"Numeric roots merged into vertex {vertex_label(v)} for {A.name}")
            raise NotOneDimensional(f"Two root parts of {A.name} share the vertex {vertex_label(v)}")
        is_zero = part.is_zero_root(field)
        basis[v] = decomposition.cartan.basis[0] if is_zero else part.space.basis[0]
    zero = as_vertex(0)
    if A.dim and zero not in basis:
        raise NotCanonical(f"Zero root is missing from the decomposition of {A.name}")
    if A.dim and decomposition.zero_part() != decomposition.cartan:
        raise NotCanonical(f"Zero root part of {A.name} differs from the Cartan subalgebra")
    constants: dict[tuple[sympy.Expr, sympy.Expr], sympy.Expr] = {}
    for a, ea in basis.items():
        for b, eb in basis.items():
            w = multiply(A, ea, eb)
            if vec_is_zero(field, w):
                continue
            target = as_vertex(a + b)
            if target not in basis:
                raise NotCanonical(f"e_{a} e_{b} != 0 but {vertex_label(target)} is not a root")
            t = basis[target]
            pivot = next(i for i, x in enumerate(t) if not field.is_zero(x))
            coeff = w[pivot] / t[pivot]
            if not vec_is_zero(field, tuple(x - coeff * y for x, y in zip(w, t))):
                raise NotCanonical(f"e_{a} e_{b} leaves the part of root {vertex_label(target)}")
            constants[(a, b)] = root_vertex(field, coeff)
    for a in basis:
        if a != zero and (a, zero) in constants:
            raise NotCanonical(f"R(e_0) does not vanish on e_{vertex_label(a)}")
    verts = tuple(sorted(basis, key=vertex_key))
    return GradedStructure(verts, constants, basis)


def graph_from_constants(
    kind: Kind, vertices: Iterable[Any], constants: Mapping[tuple[Any, Any], Any]
) -> RootGraph:
    """Left edge b -> a+b, right edge a -> a+b, for every nonzero c_{a,b}."""
    edges, coeffs = [], {}
    for (a, b), c in constants.items():
        c = sympy.sympify(c)
        if c == 0:
            continue
        a, b = as_vertex(a), as_vertex(b)
        edge = (b, as_vertex(a + b)) if kind == "left" else (a, as_vertex(a + b))
        edges.append(edge)
        coeffs[edge] = c
    return RootGraph.create(kind, vertices, edges, coeffs)


def build_graph(
    A: Algebra, decomposition: RootDecomposition | None = None, kind: Kind = "left"
) -> RootGraph:
    """Left or right root graph of A from its one-dimensional canonical decomposition.

    Raises:
        NotOneDimensional: If the decomposition has parts of dimension > 1
        NotCanonical: If the decomposition is not graded or R(e_0) != 0
    """
    structure = graded_structure(A, decomposition)
    graph = graph_from_constants(kind, structure.vertices, structure.constants)
    get_tracer().trace(
        TraceEvent.GRAPH_BUILD, ok=True, preview=A.name, kind=kind, edges=len(graph.edges)
    )
    return graph


def graph_from_structure(
    A: Algebra, decomposition: RootDecomposition | None = None
) -> tuple[RootGraph, RootGraph]:
    """Both root graphs from one computation of the eigenbasis."""
    structure = graded_structure(A, decomposition)
    return (
        graph_from_constants("left", structure.vertices, structure.constants),
        graph_from_constants("right", structure.vertices, structure.constants),
    )


def dual_graph(G: RootGraph) -> RootGraph:
    """Edge (a, b) becomes (b - a, b); left and right graphs determine each other."""
    kind: Kind = "right" if G.kind == "left" else "left"
    edges, coeffs = [], {}
    for a, b in G.edges:
        image = (as_vertex(b - a), b)
        edges.append(image)
        c = G.coefficient(a, b)
        if c is not None:
            coeffs[image] = c
    return RootGraph.create(kind, G.vertices, edges, coeffs)


def support_from_graph(G: RootGraph) -> set[tuple[sympy.Expr, sympy.Expr]]:
    """Pairs (a, b) with c_{a,b} != 0 read back from the edges."""
    if G.kind == "left":
        return {(as_vertex(b - a), a) for a, b in G.edges}
    return {(a, as_vertex(b - a)) for a, b in G.edges}


def graph_model(G: RootGraph) -> GraphModel:
    return GraphModel(
        kind=G.kind,
        vertices=[vertex_label(v) for v in G.vertices],
        edges=[[a, b] for a, b in G.edge_labels()],
        coefficients={
            f"{vertex_label(a)}->{vertex_label(b)}": sympy.sstr(G.coefficients[(a, b)])
            for a, b in G.sorted_edges()
            if (a, b) in G.coefficients
        },
    )


def graph_to_dict(G: RootGraph) -> dict[str, Any]:
    return graph_model(G).model_dump()


def to_dot(G: RootGraph, name: str | None = None) -> str:
    """Deterministic DOT text; vertices and edges sorted by (real, imaginary) part."""
    title = name or ("Gamma_l" if G.kind == "left" else "Gamma_r")
    lines = [f'digraph "{title}" {{', "  node [shape=circle];"]
    for v in G.vertices:
        label = vertex_label(v)
        lines.append(f'  "{label}" [label="{label}"];')
    for a, b in G.edge_labels():
        lines.append(f'  "{a}" -> "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
