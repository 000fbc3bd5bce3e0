"""Vertex sets that root graphs of small simple algebras can live on.

Rotations and dilations of the root set give isomorphic algebras, so every
template contains 1 and no nonzero vertex of modulus below 1. Two families
are used: unions of symmetric pairs {0, +-1, +-lam, ...} (s3 forces one
symmetric pair) and arithmetic progressions {-1, 0, 1, ..., k}.
"""

from collections.abc import Mapping
from dataclasses import dataclass, field

import sympy

from ..errors import BadParameters, TemplateExhausted
from ..graphs import as_vertex, vertex_key

MAX_TEMPLATE_DIM = 6

VertexMap = Mapping[sympy.Expr, sympy.Expr]


@dataclass(frozen=True)
class VertexTemplate:
    """A vertex set, possibly with symbolic roots, and the vertex maps that preserve it."""

    name: str
    vertices: tuple[sympy.Expr, ...]
    parameters: tuple[sympy.Symbol, ...] = ()
    excluded: tuple[sympy.Expr, ...] = ()
    symmetries: tuple[VertexMap, ...] = field(default=(), compare=False)

    @property
    def dim(self) -> int:
        return len(self.vertices)

    def contains(self, v: sympy.Expr) -> bool:
        return as_vertex(v) in self.vertices

    def vertex_set(self) -> frozenset[sympy.Expr]:
        return frozenset(self.vertices)


def _sorted(vertices) -> tuple[sympy.Expr, ...]:
    return tuple(sorted({as_vertex(v) for v in vertices}, key=vertex_key))


def _negation(vertices) -> dict[sympy.Expr, sympy.Expr]:
    return {v: as_vertex(-v) for v in vertices}


def progression(dim: int) -> VertexTemplate:
    """{-1, 0, 1, ..., dim - 2}."""
    if dim < 2:
        raise BadParameters(f"Templates start at dimension 2, got {dim}")
    vertices = _sorted(range(-1, dim - 1))
    return VertexTemplate(f"progression({dim})", vertices, symmetries=({v: v for v in vertices},))


def symmetric_pairs(dim: int) -> VertexTemplate:
    """{0, +-1, +-lam} with lam symbolic (dimension 3 or 5).

    Raises:
        BadParameters: For an even dimension or one the template does not reach
    """
    if dim % 2 == 0 or dim < 3:
        raise BadParameters(f"Symmetric pairs need an odd dimension >= 3, got {dim}")
    if dim == 3:
        vertices = _sorted((-1, 0, 1))
        return VertexTemplate("pairs(3)", vertices, symmetries=({v: v for v in vertices}, _negation(vertices)))
    if dim > 5:
        raise BadParameters("Symmetric pairs with more than one free root are not enumerated")
    lam = sympy.Symbol("lam")
    vertices = _sorted((-lam, -1, 0, 1, lam))
    swap = {
        as_vertex(0): as_vertex(0),
        as_vertex(1): lam,
        as_vertex(-1): as_vertex(-lam),
        lam: as_vertex(1),
        as_vertex(-lam): as_vertex(-1),
    }
    negate = _negation(vertices)
    symmetries = (
        {v: v for v in vertices},
        negate,
        swap,
        {v: negate[swap[v]] for v in vertices},
    )
    return VertexTemplate("pairs(5)", vertices, (lam,), (), symmetries)


def normalize_root(value: sympy.Expr) -> sympy.Expr:
    """Representative of {r, -r, 1/r, -1/r} with modulus >= 1 and positive real part
    (positive imaginary part on the imaginary axis)."""
    value = sympy.nsimplify(value)
    options = [value, -value]
    if value != 0:
        options += [1 / value, -1 / value]
    best = []
    for v in options:
        v = as_vertex(v)
        c = complex(v)
        if abs(c) >= 1 and (c.real > 0 or (c.real == 0 and c.imag > 0)):
            best.append(v)
    return min(best, key=vertex_key) if best else as_vertex(value)


def exceptional_values(template: VertexTemplate) -> list[sympy.Expr]:
    """Values of the free root at which a difference of vertices becomes a vertex.

    Only there can graphs gain edges beyond the generic ones; each value is
    normalized under the rotations and dilations that preserve the template.
    """
    if len(template.parameters) != 1:
        return []
    lam = template.parameters[0]
    found: set[sympy.Expr] = set()
    for u in template.vertices:
        for v in template.vertices:
            for w in template.vertices:
                equation = sympy.expand(v - u - w)
                if equation.free_symbols != {lam} or sympy.degree(equation, lam) != 1:
                    continue
                root = sympy.solve(equation, lam)[0]
                if root in (0, 1, -1):
                    continue
                found.add(normalize_root(root))
    return sorted(found, key=vertex_key)


def specialize(template: VertexTemplate, value: sympy.Expr) -> VertexTemplate:
    """The template at a numeric value of its free root; only negation survives as a symmetry."""
    lam = template.parameters[0]
    vertices = _sorted(v.subs(lam, value) for v in template.vertices)
    if len(vertices) != template.dim:
        raise BadParameters(f"Vertices of {template.name} collide at lam = {value}")
    symmetries = ({v: v for v in vertices}, _negation(vertices))
    return VertexTemplate(f"{template.name}[lam={sympy.sstr(value)}]", vertices, symmetries=symmetries)


def generic_template(template: VertexTemplate) -> VertexTemplate:
    """The symbolic template with its exceptional values excluded."""
    excluded = tuple(sympy.Integer(v) for v in (0, 1, -1))
    for value in exceptional_values(template):
        excluded += (value, as_vertex(-value), as_vertex(1 / value), as_vertex(-1 / value))
    unique = tuple(sorted(set(excluded), key=vertex_key))
    return VertexTemplate(template.name, template.vertices, template.parameters, unique, template.symmetries)


def templates_for(dim: int) -> list[VertexTemplate]:
    """Every template of the given dimension, distinct vertex sets only.

    Raises:
        BadParameters: If dim < 2
        TemplateExhausted: Above the largest dimension the templates cover
    """
    if dim < 2:
        raise BadParameters(f"Classification starts at dimension 2, got {dim}")
    if dim > MAX_TEMPLATE_DIM:
        raise TemplateExhausted(f"No vertex templates for dimension {dim} (at most {MAX_TEMPLATE_DIM})")
    out: list[VertexTemplate] = []
    if dim % 2 == 1 and dim <= 5:
        pairs = symmetric_pairs(dim)
        if pairs.parameters:
            out.append(generic_template(pairs))
            out.extend(specialize(pairs, value) for value in exceptional_values(pairs))
        else:
            out.append(pairs)
    out.append(progression(dim))
    unique: list[VertexTemplate] = []
    for t in out:
        if all(t.vertex_set() != u.vertex_set() for u in unique):
            unique.append(t)
    return unique
