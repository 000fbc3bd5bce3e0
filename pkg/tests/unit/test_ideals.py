"""Tests for ideal closures and the simplicity verdict."""

import pytest

from lsakit.algebra import direct_sum
from lsakit.field import EXACT, Subspace
from lsakit.ideals import ideal_closure, is_ideal, is_simple, l_kernel


def test_closure_of_a_root_vector_is_everything(auslander):
    ideal = ideal_closure(auslander, [auslander.basis_vector("e1")])
    assert ideal.subspace.is_full()
    assert not ideal.is_proper()
    assert ideal.generators == (auslander.basis_vector("e1"),)


def test_is_ideal(auslander, idempotent1):
    assert not is_ideal(auslander, Subspace.span(EXACT, 3, [auslander.basis_vector("e1")]))
    S = direct_sum(auslander, idempotent1)
    assert is_ideal(S, Subspace.span(EXACT, 4, [S.basis_vector("e")]))


def test_l_kernel(auslander, zero2):
    assert l_kernel(auslander).is_zero()
    assert l_kernel(zero2).is_full()


@pytest.mark.parametrize("fixture", ["auslander", "simple4_algebra", "family5_three"])
def test_catalog_algebras_are_simple(fixture, request):
    report = is_simple(request.getfixturevalue(fixture))
    assert report.simple
    assert report.level == "exact"
    assert report.generators_tested == request.getfixturevalue(fixture).dim


def test_catalog_closures_fill_the_space(simple4_algebra):
    for i in range(simple4_algebra.dim):
        assert ideal_closure(simple4_algebra, [simple4_algebra.basis_vector(i)]).subspace.is_full()


def test_sum_is_not_simple(auslander, idempotent1):
    report = is_simple(direct_sum(auslander, idempotent1))
    assert not report.simple
    assert report.level == "exact"
    assert len(report.witness) == 3


def test_abelian_plane_is_not_simple(zero2):
    report = is_simple(zero2)
    assert not report.simple
    assert report.witness == [["1", "0"]]


def test_one_dimensional(idempotent1):
    report = is_simple(idempotent1)
    assert report.simple
    assert report.generators_tested == 0
