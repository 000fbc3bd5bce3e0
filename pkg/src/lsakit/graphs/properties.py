"""Necessary conditions on the root graphs of complete and of simple algebras.

Left graph: l1 loops at nonzero vertices, l2 closure under differences, l3
nothing leaves 0, l4 symmetric edges into 0, l5 acyclic, l6 consecutive
edges close to a triangle or a parallelogram.
Right graph: r1 edges from 0 to every other vertex, r2 closure, r3 no
loops, r4 symmetric edges into 0, r5 never exactly one path
mu -> mu-2a -> mu-a -> mu for a given a.
Simple algebras: s1 every root is a left displacement and has a right
out-edge, s2 0 is reachable from every vertex, s3 a symmetric pair of
vertices has edges into 0 in both graphs.
"""

import networkx as nx
import sympy

from ..algebra import Algebra
from ..contracts.reports import PropertyReport, PropertyResult
from ..errors import BadParameters
from ..ideals import l_kernel
from ..tracing import TraceEvent, get_tracer
from .root_graph import RootGraph, as_vertex, vertex_label

ZERO = sympy.Integer(0)


def _labels(*vertices) -> list[str]:
    return [vertex_label(v) for v in vertices]


def _ok(name: str, note: str | None = None) -> PropertyResult:
    return PropertyResult(name=name, holds=True, note=note)


def _fail(name: str, witness: list[str], note: str | None = None) -> PropertyResult:
    return PropertyResult(name=name, holds=False, witness=witness, note=note)


def _loops_at_nonzero(G: RootGraph) -> PropertyResult:
    for v in G.vertices:
        if v != ZERO and not G.has_edge(v, v):
            return _fail("l1", _labels(v))
    return _ok("l1")


def _difference_closure(G: RootGraph, name: str) -> PropertyResult:
    for a, b in G.sorted_edges():
        if not G.has_vertex(b - a):
            return _fail(name, _labels(a, b), f"{vertex_label(as_vertex(b - a))} is not a vertex")
    return _ok(name)


def _nothing_leaves_zero(G: RootGraph) -> PropertyResult:
    out = G.out_edges(ZERO)
    return _fail("l3", _labels(*out[0])) if out else _ok("l3")


def _symmetric_into_zero(G: RootGraph, name: str) -> PropertyResult:
    for a, b in G.sorted_edges():
        if b == ZERO and a != ZERO and not G.has_edge(-a, ZERO):
            return _fail(name, _labels(a), f"no edge {vertex_label(as_vertex(-a))} -> 0")
    return _ok(name)


def _acyclic(G: RootGraph) -> PropertyResult:
    try:
        cycle = nx.find_cycle(G.digraph(loops=False))
    except nx.NetworkXNoCycle:
        return _ok("l5")
    return _fail("l5", _labels(*(edge[0] for edge in cycle)))


def _commutator_nonzero(G: RootGraph, p: sympy.Expr, q: sympy.Expr) -> bool:
    """[e_p, e_q] != 0, read from the left edges q -> p+q and p -> p+q."""
    target = as_vertex(p + q)
    pq = G.has_edge(q, target)
    qp = G.has_edge(p, target)
    if not (pq or qp):
        return False
    c_pq = G.coefficient(q, target) if pq else ZERO
    c_qp = G.coefficient(p, target) if qp else ZERO
    if c_pq is None or c_qp is None:
        return True
    return sympy.expand(c_pq - c_qp) != 0


def _triangle_or_parallelogram(G: RootGraph) -> PropertyResult:
    """For lam -> mu -> nu: e_(nu-mu) (e_(mu-lam) e_lam) splits into a parallelogram and a triangle term."""
    edges = G.non_loop_edges()
    degenerate = []
    for lam, mu in edges:
        for mu2, nu in edges:
            if mu2 != mu:
                continue
            step1, step2 = as_vertex(mu - lam), as_vertex(nu - mu)
            corner = as_vertex(lam + step2)
            if step1 == step2:
                degenerate.append(f"{vertex_label(lam)}->{vertex_label(mu)}->{vertex_label(nu)}")
                continue
            if G.has_edge(lam, corner) and G.has_edge(corner, nu):
                continue
            if G.has_edge(lam, nu) and _commutator_nonzero(G, step2, step1):
                continue
            return _fail("l6", _labels(lam, mu, nu))
    note = f"degenerate parallelograms accepted: {', '.join(degenerate)}" if degenerate else None
    return _ok("l6", note)


def _zero_joined(G: RootGraph) -> PropertyResult:
    for v in G.vertices:
        if v != ZERO and not G.has_edge(ZERO, v):
            return _fail("r1", _labels(v))
    return _ok("r1")


def _no_loops(G: RootGraph) -> PropertyResult:
    loops = G.loops()
    return _fail("r3", _labels(*loops[0])) if loops else _ok("r3")


def count_r5_paths(G: RootGraph, a: sympy.Expr) -> list[sympy.Expr]:
    """Vertices mu carrying a path mu -> mu-2a -> mu-a -> mu."""
    found = []
    for mu in G.vertices:
        first, second = as_vertex(mu - 2 * a), as_vertex(mu - a)
        if G.has_edge(mu, first) and G.has_edge(first, second) and G.has_edge(second, mu):
            found.append(mu)
    return found


def _no_single_path(G: RootGraph) -> PropertyResult:
    for a in G.vertices:
        if a == ZERO:
            continue
        found = count_r5_paths(G, a)
        if len(found) == 1:
            return _fail("r5", _labels(found[0], a), "witness is (mu, lambda)")
    return _ok("r5")


def check_properties(G: RootGraph) -> PropertyReport:
    """l1-l6 on a left graph, r1-r5 on a right graph."""
    if G.kind == "left":
        results = [
            _loops_at_nonzero(G),
            _difference_closure(G, "l2"),
            _nothing_leaves_zero(G),
            _symmetric_into_zero(G, "l4"),
            _acyclic(G),
            _triangle_or_parallelogram(G),
        ]
    else:
        results = [
            _zero_joined(G),
            _difference_closure(G, "r2"),
            _no_loops(G),
            _symmetric_into_zero(G, "r4"),
            _no_single_path(G),
        ]
    report = PropertyReport(kind=G.kind, results=results)
    get_tracer().trace(
        TraceEvent.GRAPH_PROPERTIES, ok=report.all_hold(), kind=G.kind, failed=report.failed() or None
    )
    return report


def _displacements_and_out_edges(left: RootGraph, right: RootGraph) -> PropertyResult:
    shifts = {as_vertex(b - a) for a, b in left.edges}
    for v in left.vertices:
        if v not in shifts:
            return _fail("s1", _labels(v), "no left edge parallel to 0 -> v")
        if not right.out_edges(v):
            return _fail("s1", _labels(v), "no right edge leaves v")
    return _ok("s1")


def _zero_reachable(left: RootGraph, right: RootGraph) -> PropertyResult:
    union = nx.compose(left.digraph(), right.digraph())
    if ZERO not in union:
        return _fail("s2", [], "0 is not a vertex")
    reaching = nx.ancestors(union, ZERO) | {ZERO}
    for v in left.vertices:
        if v not in reaching:
            return _fail("s2", _labels(v))
    return _ok("s2")


def _symmetric_pair(left: RootGraph, right: RootGraph) -> PropertyResult:
    for v in left.vertices:
        if v == ZERO:
            continue
        w = as_vertex(-v)
        if all(G.has_edge(v, ZERO) and G.has_edge(w, ZERO) for G in (left, right)):
            return _ok("s3", f"pair {vertex_label(v)}, {vertex_label(w)}")
    return _fail("s3", [])


def check_simple_properties(
    left: RootGraph, right: RootGraph, A: Algebra | None = None
) -> PropertyReport:
    """s1-s3 on the pair of graphs of one algebra.

    With the algebra at hand, s1 is also checked at its source: the kernel of
    L is an ideal and must vanish in a simple algebra of dimension > 1.

    Raises:
        BadParameters: If the graphs are not a left/right pair on one vertex set
    """
    if left.kind != "left" or right.kind != "right" or left.vertices != right.vertices:
        raise BadParameters("Simple properties need a left and a right graph on one vertex set")
    results = [
        _displacements_and_out_edges(left, right),
        _zero_reachable(left, right),
        _symmetric_pair(left, right),
    ]
    if A is not None and A.dim > 1:
        kernel = l_kernel(A)
        results.append(
            _ok("s1-kernel") if kernel.is_zero() else _fail("s1-kernel", [str(kernel.dim)], "dim ker L")
        )
    report = PropertyReport(kind="simple", results=results)
    get_tracer().trace(TraceEvent.GRAPH_PROPERTIES, ok=report.all_hold(), kind="simple")
    return report
