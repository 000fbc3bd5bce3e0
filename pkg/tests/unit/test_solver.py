"""Tests for the structure-constant system on candidate graphs."""

import pytest
import sympy

from lsakit.classification import (
    StructureFamily,
    enumerate_graphs,
    normalization,
    solve_structure_constants,
    structure_system,
)
from lsakit.classification.solver import family_from_constants, unknown_symbol
from lsakit.errors import BadParameters
from lsakit.graphs import build_graph


@pytest.fixture
def three_candidate():
    (candidate,) = enumerate_graphs(3)
    return candidate


@pytest.fixture
def simple4_candidate(simple4_algebra):
    graph = build_graph(simple4_algebra)
    return next(c for c in enumerate_graphs(4) if c.left_graph() == graph)


def test_unknowns_sit_on_edges(three_candidate):
    system = structure_system(three_candidate)
    assert sorted(s.name for s in system.unknowns.values()) == ["c[-1,1]", "c[1,-1]"]
    assert system.constant(0, 1) == 1
    assert system.constant(0, -1) == -1
    assert system.constant(1, 0) == 0
    assert system.constant(1, 1) == 0


def test_normalization_prefers_products_into_zero(three_candidate):
    system = structure_system(three_candidate)
    assert normalization(system) == {unknown_symbol(1, -1): 1}


def test_dimension_three_gives_auslander(three_candidate, auslander):
    (family,) = solve_structure_constants(three_candidate)
    assert isinstance(family, StructureFamily)
    assert family.free == ()
    assert family.constant(-1, 1) == 1
    assert family.instantiate().same_table(auslander)


def test_products_are_readable(three_candidate):
    (family,) = solve_structure_constants(three_candidate)
    assert family.products()[0] == "e-1 e1 = (1) e0"


def test_simple4_graph_gives_simple4(simple4_candidate, simple4_algebra):
    families = solve_structure_constants(simple4_candidate)
    assert any(f.instantiate().same_table(simple4_algebra) for f in families)


def test_family_from_constants(three_candidate, auslander):
    family = family_from_constants(three_candidate, {(0, -1): -1, (0, 1): 1, (1, -1): 1, (-1, 1): 1})
    assert family.instantiate(name="auslander3").same_table(auslander)


def test_instantiate_rejects_vanishing_constant(three_candidate):
    x = sympy.Symbol("x")
    family = StructureFamily(three_candidate, {(1, -1): x}, (x,), (), (x,), ())
    with pytest.raises(BadParameters):
        family.instantiate({x: 0})
    assert family.sample_values() == {x: 1}
