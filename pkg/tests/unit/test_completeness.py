"""Tests for completeness criteria, extension identities and derived algebras."""

import numpy as np
import pytest

from lsakit.algebra import direct_sum, unital_extension
from lsakit.classification import simple4_printed
from lsakit.completeness import (
    check_all_criteria,
    identity_report,
    is_complete,
    trace_diagonal,
    trace_invariants,
    verify_conjugation_identity,
    verify_eigenfunction,
)
from lsakit.completeness.hereditary import (
    check_corollaries,
    polynomial_degree,
    polynomial_degree_check,
    subalgebra_closure,
)
from lsakit.contracts.reports import Criterion
from lsakit.errors import NotComplete, NotLeftSymmetric, NotNilpotent
from lsakit.field import EXACT, NumericField


class TestCriteria:
    @pytest.mark.parametrize("fixture", ["auslander", "simple4_algebra", "family5_three", "zero2"])
    def test_complete_algebras(self, fixture, request):
        report = check_all_criteria(request.getfixturevalue(fixture))
        assert report.verdict
        assert all(c.holds for c in report.criteria)
        assert report.consistent()

    def test_idempotent_fails_every_criterion(self, idempotent1):
        report = check_all_criteria(idempotent1)
        assert not report.verdict
        assert report.witness_label == "e"
        for criterion in Criterion:
            assert not report.get(criterion).holds
        assert report.get(Criterion.NONVANISHING).witness == ["-1"]
        assert report.consistent()

    def test_witness_label_in_a_sum(self, auslander, idempotent1):
        report = is_complete(direct_sum(auslander, idempotent1))
        assert not report.verdict
        assert report.witness_label == "e"

    def test_det_detail(self, auslander):
        assert check_all_criteria(auslander).get("b").detail == "P(x) = 1"

    def test_requires_left_symmetry(self):
        with pytest.raises(NotLeftSymmetric) as info:
            is_complete(simple4_printed())
        assert info.value.details["witness"] == ("e-1", "e2", "e-1")

    def test_numeric_mode_is_sampled(self, auslander):
        report = check_all_criteria(auslander.with_field(NumericField()))
        assert report.verdict
        assert not report.get(Criterion.NILPOTENT).conclusive
        assert report.get(Criterion.TRACE).conclusive
        assert report.consistent()


class TestIdentityReport:
    def test_all_identities_hold(self, auslander):
        report = identity_report(auslander)
        assert report.all_hold()
        assert [c.name for c in report.checks] == ["left-symmetry", "L-representation", "LR-commutation", "jacobi"]

    def test_printed_table(self):
        report = identity_report(simple4_printed())
        assert not report.left_symmetric()
        check = report.get("left-symmetry")
        assert check.witness == ["e-1", "e2", "e-1"]
        assert len(check.values) == 2
        assert report.notes


class TestExtensionIdentities:
    def test_conjugation_identity(self, auslander):
        check = verify_conjugation_identity(auslander, auslander.element([1, 2, 3]), auslander.basis_vector("e1"))
        assert check.holds

    def test_conjugation_needs_nilpotent_exponent(self, auslander):
        with pytest.raises(NotNilpotent):
            verify_conjugation_identity(auslander, auslander.element([1, 2, 3]), auslander.basis_vector("e0"))

    def test_eigenfunction_exact(self, auslander):
        E = unital_extension(auslander)
        check = verify_eigenfunction(E, E.point(auslander.element([1, 2, 3])), auslander.basis_vector("e1"))
        assert check.holds
        assert check.character == EXACT.one

    def test_eigenfunction_numeric(self, auslander):
        A = auslander.with_field(NumericField(eps=1e-8))
        E = unital_extension(A)
        check = verify_eigenfunction(E, E.point(A.element([1, 2, 3])), A.basis_vector("e0"))
        assert check.holds
        assert abs(check.character - 1) < 1e-12

    @pytest.mark.parametrize("seed", range(50))
    def test_identities_for_small_numeric_exponents(self, simple4_algebra, seed):
        rng = np.random.default_rng(seed)
        A = simple4_algebra.with_field(NumericField(eps=1e-10))
        E = unital_extension(A)
        x = A.element(list(rng.normal(size=A.dim)))
        y = A.element(list(rng.normal(scale=0.25, size=A.dim)))
        assert verify_conjugation_identity(E, x, y).holds
        check = verify_eigenfunction(E, E.point(x), y)
        assert check.holds
        assert abs(check.lhs - check.rhs) < 1e-10


class TestTraceLemmas:
    def test_invariants_vanish(self, auslander, simple4_algebra):
        assert trace_invariants(auslander).holds
        assert trace_invariants(simple4_algebra).holds

    def test_invariants_need_completeness(self, idempotent1):
        with pytest.raises(NotComplete):
            trace_invariants(idempotent1)

    def test_trace_diagonal(self, auslander):
        diagonal = trace_diagonal(auslander, ["e1", "e-1"])
        assert [EXACT.to_string(a) for a in diagonal] == ["0", "-1", "1"]
        assert trace_diagonal(auslander, []) == []


class TestHereditary:
    def test_closure_of_root_vectors(self, auslander):
        S = subalgebra_closure(auslander, [auslander.basis_vector("e1"), auslander.basis_vector("e-1")])
        assert S.is_full()

    def test_polynomial_degree(self, auslander, idempotent1):
        assert polynomial_degree(auslander) == 0
        assert polynomial_degree(idempotent1) == 1
        assert polynomial_degree_check(idempotent1)

    def test_corollaries_on_auslander(self, auslander):
        report = check_corollaries(auslander)
        assert report.holds
        assert report.checks
        assert report.polynomial_degree == 0

    def test_corollaries_need_completeness(self, idempotent1):
        with pytest.raises(NotComplete):
            check_corollaries(idempotent1)
