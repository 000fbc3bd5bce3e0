"""Structure constants on a candidate root graph.

The unknowns are c_{a,b} on the left edges b -> a+b, with c_{0,a} = a and
c_{a,0} = 0. Left-symmetry on basis triples gives a quadratic system. It is
solved by elimination: factors known to be nonzero are stripped, variables
that occur linearly are eliminated, and products split the branch. Rescaling
e_a -> s_a e_a is used first to set a maximal independent set of unknowns to 1.
"""

import itertools
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from typing import Any

import sympy

from ..algebra import Algebra
from ..errors import BadParameters, SolverIncomplete
from ..field import EXACT, ScalarField
from ..graphs import as_vertex, vertex_key, vertex_label
from ..tracing import TraceEvent, get_tracer
from .catalog import algebra_from_constants
from .enumeration import GraphCandidate

Pair = tuple[sympy.Expr, sympy.Expr]
ZERO = sympy.Integer(0)
SAMPLE_VALUES = (1, 2, 3, -1, 5, 7, -3, 11)
SAMPLE_ROOTS = (3, 4, 5, sympy.Integer(3) + sympy.I, 7)


def unknown_symbol(a: sympy.Expr, b: sympy.Expr) -> sympy.Symbol:
    return sympy.Symbol(f"c[{vertex_label(a)},{vertex_label(b)}]")


@dataclass(frozen=True)
class StructureSystem:
    """Unknowns and left-symmetry equations of one candidate."""

    candidate: GraphCandidate
    unknowns: Mapping[Pair, sympy.Symbol]
    equations: tuple[sympy.Expr, ...]

    def constant(self, a: Any, b: Any) -> sympy.Expr:
        a, b = as_vertex(a), as_vertex(b)
        vertices = self.candidate.vertices
        if a not in vertices or b not in vertices or as_vertex(a + b) not in vertices:
            return ZERO
        if a == ZERO:
            return b
        return self.unknowns.get((a, b), ZERO)


def structure_system(candidate: GraphCandidate) -> StructureSystem:
    """Left edge b -> t carries the unknown c_{t-b,b}; one equation per triple and unordered pair."""
    unknowns: dict[Pair, sympy.Symbol] = {}
    for b, t in candidate.sorted_edges():
        a = as_vertex(t - b)
        unknowns[(a, b)] = unknown_symbol(a, b)
    system = StructureSystem(candidate, unknowns, ())
    c = system.constant
    equations: list[sympy.Expr] = []
    seen: set[sympy.Expr] = set()
    verts = candidate.vertices
    for x, y in itertools.combinations(verts, 2):
        for z in verts:
            eq = sympy.expand(
                c(y, z) * c(x, y + z)
                - c(x, y) * c(x + y, z)
                - c(x, z) * c(y, x + z)
                + c(y, x) * c(x + y, z)
            )
            if eq != 0 and eq not in seen and -eq not in seen:
                seen.add(eq)
                equations.append(eq)
    return StructureSystem(candidate, unknowns, tuple(equations))


def _weight(pair: Pair, index: Mapping[sympy.Expr, int]) -> list[int]:
    w = [0] * len(index)
    a, b = pair
    for v, sign in ((a, 1), (b, 1), (as_vertex(a + b), -1)):
        if v != ZERO:
            w[index[v]] += sign
    return w


def normalization(system: StructureSystem) -> dict[sympy.Symbol, sympy.Expr]:
    """Unknowns set to 1 by rescaling: products into 0 first, then edge order.

    An unknown is normalized when its scaling weight e_a + e_b - e_(a+b) is
    independent of the weights already used.
    """
    nonzero = [v for v in system.candidate.vertices if v != ZERO]
    index = {v: i for i, v in enumerate(nonzero)}
    pairs = sorted(
        system.unknowns,
        key=lambda p: (as_vertex(p[0] + p[1]) != ZERO, vertex_key(p[1]), vertex_key(as_vertex(p[0] + p[1]))),
    )
    chosen: list[list[int]] = []
    values: dict[sympy.Symbol, sympy.Expr] = {}
    for pair in pairs:
        w = _weight(pair, index)
        if sympy.Matrix(chosen + [w]).rank() > len(chosen):
            chosen.append(w)
            values[system.unknowns[pair]] = sympy.Integer(1)
    return values


@dataclass
class _Branch:
    equations: list[sympy.Expr]
    values: dict[sympy.Symbol, sympy.Expr]
    nonzero: list[sympy.Expr]
    splits: list[str] = field(default_factory=list)
    excluded: set[sympy.Expr] = field(default_factory=set)

    def fork(self, equation: sympy.Expr, note: str) -> "_Branch":
        return _Branch(
            self.equations + [equation], dict(self.values), list(self.nonzero), self.splits + [note], set(self.excluded)
        )


@dataclass(frozen=True)
class UnsolvedBranch:
    splits: tuple[str, ...]
    equations: tuple[str, ...]


@dataclass(frozen=True)
class StructureFamily:
    """Solutions of one branch: constants as expressions in free unknowns and the template parameters."""

    candidate: GraphCandidate
    constants: Mapping[Pair, sympy.Expr]
    free: tuple[sympy.Symbol, ...]
    parameters: tuple[sympy.Symbol, ...]
    nonzero: tuple[sympy.Expr, ...]
    normalized: tuple[sympy.Symbol, ...]
    splits: tuple[str, ...] = ()
    excluded: tuple[sympy.Expr, ...] = ()

    def constant(self, a: Any, b: Any) -> sympy.Expr:
        return self.constants.get((as_vertex(a), as_vertex(b)), ZERO)

    def symbols(self) -> tuple[sympy.Symbol, ...]:
        return self.parameters + self.free

    def key(self) -> tuple:
        return (
            self.candidate.vertices,
            self.candidate.edges,
            tuple(sorted((vertex_label(a), vertex_label(b), sympy.sstr(c)) for (a, b), c in self.constants.items())),
        )

    def products(self) -> list[str]:
        out = []
        for (a, b), c in sorted(self.constants.items(), key=lambda item: (vertex_key(item[0][0]), vertex_key(item[0][1]))):
            out.append(f"e{vertex_label(a)} e{vertex_label(b)} = ({sympy.sstr(c)}) e{vertex_label(as_vertex(a + b))}")
        return out

    def admissible(self, values: Mapping[sympy.Symbol, Any]) -> bool:
        subs = {s: sympy.sympify(v) for s, v in values.items()}
        for p in self.parameters:
            if p in subs and any(sympy.expand(subs[p] - x) == 0 for x in self.candidate.excluded + self.excluded):
                return False
        return all(sympy.simplify(e.subs(subs)) != 0 for e in self.nonzero)

    def sample_values(self) -> dict[sympy.Symbol, sympy.Expr]:
        """First admissible assignment from small fixed lists."""
        choices = [SAMPLE_ROOTS] * len(self.parameters) + [SAMPLE_VALUES] * len(self.free)
        for combo in itertools.product(*choices):
            values = {s: sympy.sympify(v) for s, v in zip(self.symbols(), combo)}
            if self.admissible(values):
                return values
        raise BadParameters(f"No admissible sample for {self.candidate.label()}")

    def instantiate(
        self, values: Mapping[sympy.Symbol, Any] | None = None, field: ScalarField = EXACT, name: str | None = None
    ) -> Algebra:
        """Algebra at the given values of the free symbols (default: ``sample_values``).

        Raises:
            BadParameters: If the values make a nonzero constant vanish or hit an excluded root
        """
        values = dict(values) if values is not None else self.sample_values()
        if not self.admissible(values):
            raise BadParameters("Values violate the family's constraints")
        subs = {s: sympy.sympify(v) for s, v in values.items()}
        vertices = [as_vertex(v.subs(subs)) for v in self.candidate.vertices]
        constants = {
            (as_vertex(a.subs(subs)), as_vertex(b.subs(subs))): sympy.expand(c.subs(subs))
            for (a, b), c in self.constants.items()
        }
        label = ",".join(f"{s}={sympy.sstr(v)}" for s, v in subs.items())
        return algebra_from_constants(name or f"solution({label})", vertices, constants, field)


def _known_nonzero(expr: sympy.Expr, nonzero_symbols: set[sympy.Symbol], parameters: set[sympy.Symbol]) -> bool:
    """Numbers, monomials in nonzero unknowns, and expressions in the template parameters alone."""
    if expr.is_number:
        return expr != 0
    free = expr.free_symbols
    if free <= parameters:
        return True
    if isinstance(expr, sympy.Symbol):
        return expr in nonzero_symbols
    if isinstance(expr, sympy.Pow):
        return _known_nonzero(expr.base, nonzero_symbols, parameters)
    if isinstance(expr, sympy.Mul):
        return all(_known_nonzero(f, nonzero_symbols, parameters) for f in expr.args)
    return False


class _Solver:
    def __init__(self, system: StructureSystem, normalize: bool = True):
        self.system = system
        self.parameters = set(system.candidate.parameters)
        self.unknowns = set(system.unknowns.values())
        self.normalized = normalization(system) if normalize else {}
        self.tracer = get_tracer()

    def _factors(self, eq: sympy.Expr, branch: _Branch) -> list[sympy.Expr] | None:
        """Factors that may vanish; None when the equation cannot hold."""
        _, factors = sympy.factor_list(eq)
        kept = []
        for f, _ in factors:
            if f.free_symbols and f.free_symbols <= self.parameters:
                branch.excluded.update(r for r in sympy.solve(f, *f.free_symbols) if r.is_number)
                continue
            if _known_nonzero(f, self.unknowns, self.parameters):
                continue
            kept.append(f)
        return kept or None

    def _substitute(self, expr: sympy.Expr, values: Mapping[sympy.Symbol, sympy.Expr]) -> sympy.Expr:
        return sympy.expand(sympy.together(expr.subs(values)))

    def _numerator(self, expr: sympy.Expr) -> sympy.Expr:
        return sympy.expand(sympy.numer(sympy.together(expr)))

    def _eliminate(self, f: sympy.Expr, branch: _Branch) -> list[_Branch] | None:
        """Branches after solving f = 0 for one variable, or None when f resists."""
        variables = sorted(f.free_symbols & self.unknowns, key=lambda s: s.name)
        for u in variables:
            poly = sympy.Poly(f, u)
            if poly.degree() != 1:
                continue
            p, q = poly.all_coeffs()
            solution = sympy.cancel(-q / p)
            if _known_nonzero(sympy.factor(p), self.unknowns, self.parameters):
                return [self._assign(branch, u, solution)]
            nonzero = self._assign(branch, u, solution)
            nonzero.nonzero.append(p)
            nonzero.splits.append(f"{sympy.sstr(p)} != 0")
            vanishing = branch.fork(p, f"{sympy.sstr(p)} = 0")
            vanishing.equations.append(q)
            return [nonzero, vanishing]
        if len(variables) == 1:
            u = variables[0]
            roots = sympy.roots(sympy.Poly(f, u), filter=None)
            gaussian = {r: m for r, m in roots.items() if self._admissible_root(r)}
            if sum(gaussian.values()) < sympy.degree(f, u):
                return None
            return [self._assign(branch, u, r, note=f"{u} = {sympy.sstr(r)}") for r in sorted(gaussian, key=sympy.default_sort_key)]
        return None

    def _admissible_root(self, r: sympy.Expr) -> bool:
        if r.free_symbols:
            return r.free_symbols <= self.parameters and r.is_rational_function(*self.parameters)
        return _is_gaussian(r)

    def _assign(self, branch: _Branch, u: sympy.Symbol, value: sympy.Expr, note: str | None = None) -> _Branch:
        values = {s: sympy.cancel(v.subs(u, value)) for s, v in branch.values.items()}
        values[u] = value
        nonzero = list(branch.nonzero)
        if u in self.unknowns:
            nonzero.append(value)
        splits = branch.splits + ([note] if note else [])
        return _Branch(list(branch.equations), values, nonzero, splits, set(branch.excluded))

    def _step(self, branch: _Branch) -> tuple[list[_Branch], StructureFamily | UnsolvedBranch | None]:
        """One reduction: new branches to explore, or a finished result (None when inconsistent)."""
        for e in branch.nonzero:
            if self._substitute(e, branch.values) == 0:
                return [], None
        reduced: list[list[sympy.Expr]] = []
        for eq in branch.equations:
            eq = self._numerator(self._substitute(eq, branch.values))
            if eq == 0:
                continue
            factors = self._factors(eq, branch)
            if factors is None:
                return [], None
            reduced.append(factors)
        if not reduced:
            return [], self._family(branch)
        reduced.sort(key=lambda fs: (len(fs), len(set().union(*(f.free_symbols for f in fs))), sympy.default_sort_key(fs[0])))
        factors = reduced[0]
        rest = [sympy.Mul(*fs) for fs in reduced[1:]]
        base = _Branch(rest, branch.values, branch.nonzero, branch.splits, branch.excluded)
        if len(factors) > 1:
            self.tracer.trace(TraceEvent.SOLVER_BRANCH, split=[sympy.sstr(f) for f in factors])
            return [base.fork(f, f"{sympy.sstr(f)} = 0") for f in factors], None
        branches = self._eliminate(factors[0], base)
        if branches is None:
            return [], UnsolvedBranch(tuple(branch.splits), tuple(sympy.sstr(sympy.Mul(*fs)) for fs in reduced))
        return branches, None

    def _family(self, branch: _Branch) -> StructureFamily:
        values = dict(branch.values)
        constants: dict[Pair, sympy.Expr] = {}
        for v in self.system.candidate.vertices:
            if v != ZERO:
                constants[(ZERO, v)] = v
        for pair, s in self.system.unknowns.items():
            constants[pair] = sympy.cancel(values.get(s, s))
        free = tuple(sorted(self.unknowns - set(values), key=lambda s: s.name))
        nonzero = []
        for e in branch.nonzero + list(free):
            e = self._numerator(self._substitute(e, values))
            if not e.is_number and e not in nonzero:
                nonzero.append(e)
        normalized = tuple(sorted(self.normalized, key=lambda s: s.name))
        return StructureFamily(
            self.system.candidate,
            constants,
            free,
            tuple(self.system.candidate.parameters),
            tuple(nonzero),
            normalized,
            tuple(branch.splits),
            tuple(sorted(branch.excluded, key=vertex_key)),
        )

    def solve(self) -> tuple[list[StructureFamily], list[UnsolvedBranch]]:
        start = _Branch(list(self.system.equations), dict(self.normalized), [])
        pending = [start]
        families: dict[tuple, StructureFamily] = {}
        unsolved: list[UnsolvedBranch] = []
        while pending:
            branch = pending.pop()
            more, result = self._step(branch)
            pending.extend(reversed(more))
            if isinstance(result, StructureFamily):
                families.setdefault(result.key(), result)
            elif isinstance(result, UnsolvedBranch):
                unsolved.append(result)
        return sorted(families.values(), key=lambda f: f.key()), unsolved


def _is_gaussian(value: sympy.Expr) -> bool:
    try:
        EXACT.from_sympy(value)
    except BadParameters:
        return False
    return True


def solve_structure_constants(candidate: GraphCandidate, normalize: bool = True) -> list[StructureFamily]:
    """Families of structure constants realizing the candidate, nonzero on every edge.

    Raises:
        SolverIncomplete: If some branch could not be reduced; solved families
            travel in the exception's ``families`` detail
    """
    system = structure_system(candidate)
    families, unsolved = _Solver(system, normalize).solve()
    get_tracer().trace(
        TraceEvent.SOLVER_DONE,
        ok=not unsolved,
        preview=candidate.label(),
        equations=len(system.equations),
        families=len(families),
        unsolved=len(unsolved) or None,
    )
    if unsolved:
        raise SolverIncomplete(
            f"{len(unsolved)} branch(es) unsolved for {candidate.label()}",
            branches=unsolved,
            families=families,
        )
    return families


def family_from_constants(
    candidate: GraphCandidate, constants: Mapping[tuple[Any, Any], Any], free: Iterable[sympy.Symbol] = ()
) -> StructureFamily:
    """Wrap explicit constants as a family on the candidate, for comparisons with catalog tables."""
    consts = {(as_vertex(a), as_vertex(b)): sympy.sympify(c) for (a, b), c in constants.items()}
    return StructureFamily(candidate, consts, tuple(free), tuple(candidate.parameters), (), ())
