"""Tests for structure-constant algebras, their identities and constructions."""

import pytest
import sympy

from lsakit.algebra import (
    Algebra,
    ad_operator,
    affine_field,
    associator,
    change_basis,
    check_L_representation,
    check_lie_admissible,
    check_LR_identity,
    direct_sum,
    extended_det,
    is_left_symmetric,
    left_operator,
    lie_bracket,
    multiply,
    perturb,
    quotient,
    rescale,
    right_det_polynomial,
    right_det_symbolic,
    right_operator,
    subalgebra,
    unital_extension,
    verify_left_degenerate,
)
from lsakit.classification import simple4_printed
from lsakit.errors import BadParameters, DimensionMismatch
from lsakit.field import EXACT, Matrix, Subspace


def test_auslander_products(auslander):
    assert auslander.basis == ("e-1", "e0", "e1")
    e1_em1 = multiply(auslander, auslander.basis_vector("e1"), auslander.basis_vector("e-1"))
    assert e1_em1 == auslander.basis_vector("e0")
    e0_em1 = multiply(auslander, auslander.basis_vector("e0"), auslander.basis_vector("e-1"))
    assert e0_em1 == auslander.element({"e-1": -1})


def test_left_operator_of_e0_is_the_grading(auslander):
    L0 = left_operator(auslander, auslander.basis_vector("e0"))
    assert L0 == Matrix.from_rows(EXACT, [[-1, 0, 0], [0, 0, 0], [0, 0, 1]])


def test_associator_of_root_vectors(auslander):
    e1, em1 = auslander.basis_vector("e1"), auslander.basis_vector("e-1")
    assert associator(auslander, e1, em1, e1) == auslander.element({"e1": -1})
    assert associator(auslander, em1, e1, e1) == auslander.element({"e1": -1})


def test_right_operator_columns(auslander):
    R = right_operator(auslander, auslander.basis_vector("e-1"))
    assert R == Matrix.from_rows(EXACT, [[0, -1, 0], [0, 0, 1], [0, 0, 0]])


def test_affine_field(auslander):
    F = affine_field(auslander, auslander.basis_vector("e1"), auslander.basis_vector("e-1"))
    assert F == auslander.element({"e0": 1, "e1": 1})


def test_ad_is_left_minus_right(auslander):
    x = auslander.element([1, 2, 3])
    ad = ad_operator(auslander, x)
    y = auslander.element([0, 1, 1])
    assert ad.apply(y) == lie_bracket(auslander, x, y)


@pytest.mark.parametrize("fixture", ["auslander", "simple4_algebra", "family5_three", "zero2", "idempotent1"])
def test_catalog_and_controls_are_left_symmetric(fixture, request):
    A = request.getfixturevalue(fixture)
    assert is_left_symmetric(A)
    assert check_L_representation(A)
    assert check_LR_identity(A)
    assert check_lie_admissible(A)


def test_printed_table_is_rejected_with_witness():
    result = is_left_symmetric(simple4_printed())
    assert not result
    assert result.witness == ("e-1", "e2", "e-1")
    assert not check_L_representation(simple4_printed())


def test_duplicate_labels_rejected():
    with pytest.raises(BadParameters):
        Algebra.from_products("bad", ["a", "a"], {})


def test_unknown_label_rejected():
    with pytest.raises(BadParameters):
        Algebra.from_products("bad", ["a"], {("a", "b"): {"a": 1}})


def test_element_dimension_checked(auslander):
    with pytest.raises(DimensionMismatch):
        auslander.element([1, 2])


def test_format(auslander):
    assert auslander.format(auslander.element({"e0": 1, "e1": -2})) == "e0 - 2*e1"
    assert auslander.format(auslander.zero()) == "0"


def test_right_determinant_of_auslander_is_one(auslander):
    assert right_det_symbolic(auslander) == 1


def test_complete_algebra_is_left_degenerate(auslander, simple4_algebra):
    assert verify_left_degenerate(auslander)
    assert verify_left_degenerate(simple4_algebra)


def test_idempotent_is_not_left_degenerate(idempotent1):
    assert not verify_left_degenerate(idempotent1)


def test_right_determinant_at_points(auslander, idempotent1):
    assert right_det_polynomial(auslander, auslander.element([1, 2, 3])) == EXACT.one
    assert EXACT.to_string(right_det_polynomial(idempotent1, idempotent1.element([2]))) == "3"


def test_extended_determinant(auslander):
    E = unital_extension(auslander)
    assert extended_det(E, E.unit) == EXACT.one
    assert extended_det(E, E.point(auslander.element([1, 2, 3]))) == EXACT.one


def test_right_determinant_of_idempotent(idempotent1):
    (x1,) = sympy.symbols("x1:2")
    assert sympy.expand(right_det_symbolic(idempotent1) - (1 + x1)) == 0


class TestUnitalExtension:
    def test_unit_acts_as_identity(self, auslander):
        E = unital_extension(auslander)
        assert E.extended.dim == 4
        assert E.extended.basis[-1] == "1"
        for i in range(E.extended.dim):
            v = E.extended.basis_vector(i)
            assert multiply(E.extended, E.unit, v) == v
            assert multiply(E.extended, v, E.unit) == v

    def test_point_and_project(self, auslander):
        E = unital_extension(auslander)
        x = auslander.element([1, 0, 2])
        assert E.project(E.point(x)) == x
        assert E.point(x)[-1] == EXACT.one

    def test_extension_stays_left_symmetric(self, auslander):
        assert is_left_symmetric(unital_extension(auslander).extended)
        assert unital_extension(auslander).left_symmetric

    def test_extension_of_printed_table_records_the_failure(self):
        check = unital_extension(simple4_printed()).left_symmetric
        assert not check
        assert check.witness == ("e-1", "e2", "e-1")


class TestConstructions:
    def test_direct_sum_renames_clashing_labels(self, auslander):
        S = direct_sum(auslander, auslander)
        assert S.dim == 6
        assert S.basis[0] == "auslander3#1.e-1"
        assert S.basis[3] == "auslander3#2.e-1"
        assert len(set(S.basis)) == 6
        assert is_left_symmetric(S)

    def test_direct_sum_of_differently_named_summands(self, auslander, simple4_algebra):
        S = direct_sum(auslander, simple4_algebra)
        assert S.basis[:3] == ("auslander3.e-1", "auslander3.e0", "auslander3.e1")
        assert S.basis[3] == "simple4.e-1"

    def test_subalgebra_of_zero_part(self, auslander):
        S = Subspace.span(EXACT, 3, [auslander.basis_vector("e0")])
        B = subalgebra(auslander, S)
        assert B.basis == ("e0",)
        assert B.table[0][0] == (EXACT.zero,)

    def test_subalgebra_requires_closure(self, auslander):
        S = Subspace.span(EXACT, 3, [auslander.basis_vector("e1"), auslander.basis_vector("e-1")])
        with pytest.raises(BadParameters, match="not closed"):
            subalgebra(auslander, S)

    def test_quotient_by_summand(self, auslander, idempotent1):
        S = direct_sum(auslander, idempotent1)
        ideal = Subspace.span(EXACT, 4, [S.basis_vector("e")])
        Q = quotient(S, ideal)
        assert Q.same_table(auslander)

    def test_quotient_requires_ideal(self, auslander):
        S = Subspace.span(EXACT, 3, [auslander.basis_vector("e1")])
        with pytest.raises(BadParameters, match="two-sided ideal"):
            quotient(auslander, S)

    def test_change_basis_identity(self, auslander):
        B = change_basis(auslander, Matrix.identity(EXACT, 3))
        assert B.same_table(auslander)

    def test_rescale_keeps_left_symmetry(self, simple4_algebra):
        B = rescale(simple4_algebra, [2, 1, 3, "1/2"])
        assert is_left_symmetric(B)
        assert not B.same_table(simple4_algebra)

    def test_perturb_is_deterministic(self, auslander):
        assert perturb(auslander, 7).same_table(perturb(auslander, 7))
        assert not perturb(auslander, 7).same_table(auslander)
