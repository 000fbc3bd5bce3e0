"""Tests for isomorphism within the two-parameter modification of family5(2)."""

import pytest
import sympy

from lsakit.classification import (
    diagonal_isomorphism,
    family5_mod,
    find_diagonal_isomorphism,
    iso_family5,
    projective_point,
    projective_points,
)
from lsakit.errors import BadParameters, DimensionMismatch


@pytest.mark.parametrize(
    "t, t2, expected",
    [
        ((1, 2, 0), (2, 4, 0), True),
        ((1, 2, 0), (0, 1, -1), False),
        ((1, 2, 0), (1, 0, 2), False),
        ((1, 0, 2), ("1/2", 0, 1), True),
        ((0, 0, 0), (0, 0, 0), True),
        ((0, 0, 0), (1, 2, 0), False),
        (("1+i", 2, "2i"), ("2+2i", 4, "4i"), True),
    ],
)
def test_collinear_triples_are_isomorphic(t, t2, expected):
    assert iso_family5(t, t2) is expected


def test_triples_must_satisfy_the_relation():
    with pytest.raises(BadParameters):
        iso_family5((1, 1, 0), (1, 2, 0))
    with pytest.raises(BadParameters):
        projective_point((1, 2))


def test_projective_point():
    assert projective_point((2, 4, 0)) == (1, 2, 0)
    assert projective_point((0, 2, -2)) == (0, 1, -1)
    assert projective_point((0, 0, 0)) is None


def test_distinguished_points():
    points = projective_points()
    assert [p.name for p in points] == ["alpha=0", "beta=0", "gamma=0"]
    for point in points:
        a, b, g = point.point
        assert sympy.expand(2 * a - b - g) == 0
        assert projective_point(point.point) == point.point


def test_explicit_rescaling_between_collinear_members():
    factors = find_diagonal_isomorphism((1, 2, 0), (2, 4, 0))
    assert factors is not None
    assert len(factors) == 5


def test_no_rescaling_between_distinct_points():
    assert find_diagonal_isomorphism((1, 2, 0), (0, 1, -1)) is None


def test_identity_rescaling(auslander):
    assert diagonal_isomorphism(auslander, auslander) is not None


def test_dimensions_must_agree(auslander):
    with pytest.raises(DimensionMismatch):
        diagonal_isomorphism(auslander, family5_mod(1, 2, 0))
