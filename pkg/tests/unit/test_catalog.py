"""Tests for the catalog of named algebras."""

import itertools

import pytest
import sympy

from lsakit.algebra import is_left_symmetric
from lsakit.classification import (
    algebra_from_constants,
    auslander3,
    catalog,
    family5_mod,
    list_catalog,
    root_label,
    series,
)
from lsakit.errors import BadParameters


def test_entries_are_sorted():
    assert [e.name for e in list_catalog()] == [
        "auslander3",
        "family5",
        "family5_mod",
        "series",
        "simple4",
        "simple4_printed",
    ]


def test_root_labels():
    assert root_label(-1) == "e-1"
    assert root_label(sympy.Integer(3) + sympy.I) == "e[3 + I]"


def test_defaults_and_parameters():
    assert catalog("family5").name == "family5(3)"
    assert catalog("family5", {"lam": "2"}).name == "family5(2)"
    assert catalog("family5_mod").name == "family5_mod(1,2,0)"
    assert catalog("series", {"n": 6}).dim == 6


@pytest.mark.parametrize(
    "name, params",
    [
        ("nope", {}),
        ("auslander3", {"lam": 2}),
        ("family5", {"lam": 1}),
        ("family5", {"lam": "x+"}),
        ("family5_mod", {"alpha": 1, "beta": 1, "gamma": 0}),
        ("series", {"n": 2}),
    ],
)
def test_invalid_requests(name, params):
    with pytest.raises(BadParameters):
        catalog(name, params)


def test_series_three_is_auslander():
    assert series(3).same_table(auslander3())


def test_every_series_is_left_symmetric():
    for n in range(3, 7):
        assert is_left_symmetric(series(n))


def test_gaussian_family_member():
    A = family5_mod("1+i", 2, "2i")
    assert is_left_symmetric(A)


def test_relaxed_family_member_fails_the_identity():
    A = family5_mod(1, 1, 0, strict=False)
    result = is_left_symmetric(A)
    assert not result


@pytest.mark.parametrize("alpha, beta, gamma", list(itertools.product([-1, 0, 1, 2], repeat=3)))
def test_family5_mod_is_left_symmetric_on_the_constraint(alpha, beta, gamma):
    A = family5_mod(alpha, beta, gamma, strict=False)
    assert bool(is_left_symmetric(A)) == (2 * alpha == beta + gamma)


def test_products_stay_on_the_roots():
    with pytest.raises(BadParameters, match="leaves the roots"):
        algebra_from_constants("bad", (-1, 0, 1), {(1, 1): 1})
