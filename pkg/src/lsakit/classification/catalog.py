"""Named simple complete algebras with one-dimensional canonical decompositions.

Every algebra is written in its root eigenbasis: e_a e_b = c_{a,b} e_{a+b},
with e_0 e_a = a e_a and e_a e_0 = 0.
"""

from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass, field
from typing import Any

import sympy

from ..algebra import Algebra
from ..errors import AlgebraFormatError, BadParameters
from ..field import EXACT, ScalarField


def root_label(v: Any) -> str:
    v = sympy.expand(sympy.sympify(v))
    if v.is_Integer:
        return f"e{int(v)}"
    return f"e[{sympy.sstr(v)}]"


def _root_order(v: sympy.Expr) -> tuple:
    c = complex(v)
    return (c.real, c.imag)


def algebra_from_constants(
    name: str,
    vertices: Iterable[Any],
    constants: Mapping[tuple[Any, Any], Any],
    field: ScalarField = EXACT,
    notes: Iterable[str] = (),
) -> Algebra:
    """Algebra on the root basis {e_a}; c_{0,a} = a is filled in unless given.

    Raises:
        BadParameters: If a product lands outside the vertex set
    """
    verts = sorted({sympy.expand(sympy.sympify(v)) for v in vertices}, key=_root_order)
    labels = {v: root_label(v) for v in verts}
    products: dict[tuple[str, str], dict[str, Any]] = {}
    for v in verts:
        if v != 0:
            products[(labels[sympy.Integer(0)], labels[v])] = {labels[v]: v}
    for (a, b), c in constants.items():
        a, b = sympy.expand(sympy.sympify(a)), sympy.expand(sympy.sympify(b))
        c = sympy.sympify(c)
        if c == 0:
            continue
        target = sympy.expand(a + b)
        if a not in labels or b not in labels or target not in labels:
            raise BadParameters(f"Product e_{a} e_{b} leaves the roots of {name}")
        products[(labels[a], labels[b])] = {labels[target]: c}
    return Algebra.from_products(name, [labels[v] for v in verts], products, field, notes)


def auslander3(field: ScalarField = EXACT) -> Algebra:
    return algebra_from_constants("auslander3", (-1, 0, 1), {(1, -1): 1, (-1, 1): 1}, field)


def simple4(field: ScalarField = EXACT) -> Algebra:
    """e2 e-1 = e1 and e-1 e2 = 2 e1, the left-symmetric choice of the two constants."""
    return algebra_from_constants(
        "simple4", (-1, 0, 1, 2), {(1, -1): 1, (-1, 1): 1, (2, -1): 1, (-1, 2): 2}, field
    )


def simple4_printed(field: ScalarField = EXACT) -> Algebra:
    """The four-dimensional table with the two constants exchanged; not left-symmetric."""
    return algebra_from_constants(
        "simple4_printed",
        (-1, 0, 1, 2),
        {(1, -1): 1, (-1, 1): 1, (2, -1): 2, (-1, 2): 1},
        field,
        notes=("constants of e2 e-1 and e-1 e2 exchanged",),
    )


def _parameter(value: Any, name: str) -> sympy.Expr:
    """Numbers and Gaussian-rational strings such as "1/2" or "2+i"."""
    try:
        if isinstance(value, str):
            return EXACT.to_sympy(EXACT.parse(value))
        return sympy.sympify(value)
    except (AlgebraFormatError, sympy.SympifyError, TypeError) as e:
        raise BadParameters(f"Parameter {name}={value!r} is not a number") from e


def family5(lam: Any = 3, field: ScalarField = EXACT) -> Algebra:
    """Two symmetric pairs of roots, {0, +-1, +-lam}.

    Raises:
        BadParameters: If lam is 0, 1 or -1
    """
    lam = _parameter(lam, "lam")
    if not lam.is_number or lam in (0, 1, -1):
        raise BadParameters(f"family5 needs a number lam outside {{0, 1, -1}}, got {lam}")
    constants = {(1, -1): 1, (-1, 1): 1, (lam, -lam): 1, (-lam, lam): 1}
    return algebra_from_constants(f"family5({sympy.sstr(lam)})", (-lam, -1, 0, 1, lam), constants, field)


def family5_mod(alpha: Any, beta: Any, gamma: Any, field: ScalarField = EXACT, strict: bool = True) -> Algebra:
    """family5(2) with e2 e-1 = alpha e1, e-1 e2 = beta e1 and e-1 e-1 = gamma e-2.

    The table is left-symmetric exactly when 2 alpha = beta + gamma; ``strict=False``
    builds it anyway so the checker can be run on the other triples.

    Raises:
        BadParameters: If strict and 2 alpha != beta + gamma
    """
    a, b, g = (_parameter(v, n) for v, n in ((alpha, "alpha"), (beta, "beta"), (gamma, "gamma")))
    if strict and sympy.expand(2 * a - b - g) != 0:
        raise BadParameters(f"family5_mod needs 2*alpha = beta + gamma, got ({a}, {b}, {g})")
    constants = {
        (1, -1): 1,
        (-1, 1): 1,
        (2, -2): 1,
        (-2, 2): 1,
        (2, -1): a,
        (-1, 2): b,
        (-1, -1): g,
    }
    name = f"family5_mod({sympy.sstr(a)},{sympy.sstr(b)},{sympy.sstr(g)})"
    return algebra_from_constants(name, (-2, -1, 0, 1, 2), constants, field)


def series(n: Any = 5, field: ScalarField = EXACT) -> Algebra:
    """Roots -1, 0, 1, ..., n-2 with e-1 e_k = k e_(k-1) and e_k e-1 = e_(k-1).

    Raises:
        BadParameters: If n < 3
    """
    n = int(_parameter(n, "n"))
    if n < 3:
        raise BadParameters(f"series needs n >= 3, got {n}")
    constants: dict[tuple[int, int], int] = {}
    for k in range(1, n - 1):
        constants[(-1, k)] = k
        constants[(k, -1)] = 1
    return algebra_from_constants(f"series({n})", range(-1, n - 1), constants, field)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    parameters: tuple[str, ...]
    constructor: Callable[..., Algebra]
    description: str = ""
    defaults: Mapping[str, Any] = field(default_factory=dict)


CATALOG: dict[str, CatalogEntry] = {
    entry.name: entry
    for entry in (
        CatalogEntry("auslander3", (), auslander3, "Auslander's three-dimensional algebra"),
        CatalogEntry("simple4", (), simple4, "The simple four-dimensional algebra"),
        CatalogEntry("simple4_printed", (), simple4_printed, "simple4 with exchanged constants"),
        CatalogEntry("family5", ("lam",), family5, "Roots {0, +-1, +-lam}", {"lam": 3}),
        CatalogEntry(
            "family5_mod",
            ("alpha", "beta", "gamma"),
            family5_mod,
            "Roots {0, +-1, +-2} with three extra products",
            {"alpha": 1, "beta": 2, "gamma": 0},
        ),
        CatalogEntry("series", ("n",), series, "Roots -1, 0, ..., n-2", {"n": 5}),
    )
}


def list_catalog() -> list[CatalogEntry]:
    return [CATALOG[name] for name in sorted(CATALOG)]


def catalog(name: str, params: Mapping[str, Any] | None = None, field: ScalarField = EXACT) -> Algebra:
    """Build a catalog algebra; missing parameters take the entry defaults.

    Raises:
        BadParameters: On an unknown name, an unknown parameter or an invalid value
    """
    entry = CATALOG.get(name)
    if entry is None:
        raise BadParameters(f"Unknown catalog algebra {name!r}; known: {', '.join(sorted(CATALOG))}")
    params = dict(params or {})
    unknown = set(params) - set(entry.parameters)
    if unknown:
        raise BadParameters(f"{name} takes no parameter {', '.join(sorted(unknown))}")
    values = {p: params.get(p, entry.defaults.get(p)) for p in entry.parameters}
    missing = [p for p, v in values.items() if v is None]
    if missing:
        raise BadParameters(f"{name} needs {', '.join(missing)}")
    return entry.constructor(**values, field=field)
