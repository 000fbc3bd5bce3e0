"""Tests for Cartan subalgebras, root decompositions and the canonical decomposition."""

from fractions import Fraction

import pytest

from lsakit.algebra import left_operator, multiply, rescale, unital_extension
from lsakit.decomposition import (
    TransportWord,
    adjoint_word,
    apply_word,
    canonical_report,
    cartan_subalgebra,
    decomposition_to_dict,
    derivation_check,
    derived_series,
    grading_check,
    is_canonical,
    is_cartan,
    is_solvable,
    make_canonical,
    real_parts,
    root_decomposition,
    semisimple_parts_agree,
    transport_to_unit,
    unit_in_zero_part,
    zero_root_point,
)
from lsakit.errors import BadParameters, NotCanonical, NotComplete
from lsakit.field import EXACT, Matrix, Subspace, exp_nilpotent


def span(A, *labels):
    return Subspace.span(EXACT, A.dim, [A.basis_vector(label) for label in labels])


def span_of(A, vector):
    return Subspace.span(EXACT, A.dim, [A.element(vector)])


def grading_automorphism(A, t):
    """diag(t^a) on the root basis {e_a}."""
    values = [Fraction(t) ** int(label[1:]) for label in A.basis]
    rows = [[v if i == j else 0 for j in range(A.dim)] for i, v in enumerate(values)]
    return Matrix.from_rows(EXACT, rows)


def is_automorphism(A, D):
    e = [A.basis_vector(i) for i in range(A.dim)]
    return all(
        D.apply(multiply(A, u, v)) == multiply(A, D.apply(u), D.apply(v)) for u in e for v in e
    )


class TestCartan:
    def test_derived_series(self, auslander):
        assert [S.dim for S in derived_series(auslander)] == [3, 2, 0]
        assert is_solvable(auslander)

    def test_regular_seed(self, auslander):
        assert cartan_subalgebra(auslander, auslander.basis_vector("e0")) == span(auslander, "e0")

    def test_non_canonical_seed(self, auslander):
        h = cartan_subalgebra(auslander, auslander.element({"e0": 1, "e1": 1}))
        assert h == span_of(auslander, {"e0": 1, "e1": 1})

    def test_is_cartan(self, auslander):
        assert is_cartan(auslander, span(auslander, "e0"))
        assert not is_cartan(auslander, span(auslander, "e1"))


class TestRootDecomposition:
    def test_left_roots_of_auslander(self, auslander):
        decomposition = root_decomposition(auslander, span(auslander, "e0"), "L")
        assert [EXACT.to_string(r[0]) for r in decomposition.roots()] == ["-1", "0", "1"]
        assert decomposition.is_one_dimensional()
        assert decomposition.part([1]) == span(auslander, "e1")
        assert decomposition.part([2]) is None
        assert grading_check(auslander, decomposition)

    def test_unknown_representation(self, auslander):
        with pytest.raises(BadParameters):
            root_decomposition(auslander, span(auslander, "e0"), "R")

    def test_to_dict(self, auslander):
        data = decomposition_to_dict(root_decomposition(auslander, span(auslander, "e0"), "ad"))
        assert data["rep"] == "ad"
        assert data["cartan"] == [["0", "1", "0"]]
        assert [p["root"] for p in data["parts"]] == [["-1"], ["0"], ["1"]]

    def test_real_parts_of_real_roots(self, auslander):
        parts = real_parts(root_decomposition(auslander, span(auslander, "e0"), "L"))
        assert [p.space.dim for p in parts] == [1, 1, 1]


class TestCanonical:
    def test_canonicity(self, auslander):
        assert is_canonical(auslander, span(auslander, "e0"))
        assert unit_in_zero_part(auslander, span(auslander, "e0"))
        skew = span_of(auslander, {"e0": 1, "e1": 1})
        assert not is_canonical(auslander, skew)
        assert not unit_in_zero_part(auslander, skew)

    def test_worked_transport(self, auslander):
        form = make_canonical(auslander, seed=auslander.element({"e0": 1, "e1": 1}))
        assert form.cartan == span(auslander, "e0")
        assert form.word.factors == (auslander.basis_vector("e1"),)
        assert form.rounds == 1

    def test_word_conjugates_the_seed_cartan(self, auslander):
        seed = auslander.element({"e0": 1, "e1": 1})
        form = make_canonical(auslander, seed=seed)
        assert adjoint_word(auslander, form.word, Subspace.span(EXACT, 3, [seed])) == span(auslander, "e0")

    def test_canonical_seed_needs_no_word(self, auslander):
        form = make_canonical(auslander, seed=auslander.basis_vector("e0"))
        assert len(form.word) == 0
        assert form.point == unital_extension(auslander).unit

    @pytest.mark.parametrize("fixture", ["auslander", "simple4_algebra", "family5_three"])
    def test_unique_across_seeds(self, fixture, request):
        A = request.getfixturevalue(fixture)
        e0 = A.basis_vector("e0")
        seeds = [None, e0, A.element({"e0": 1, "e1": 1})]
        cartans = [make_canonical(A, seed=s).cartan for s in seeds]
        assert all(h == span(A, "e0") for h in cartans)

    def test_rescaling_keeps_the_canonical_part(self, family5_three):
        B = rescale(family5_three, [2, 3, 1, 5, 7])
        assert make_canonical(B).cartan == span(B, "e0")

    def test_semisimple_parts_and_derivations(self, simple4_algebra):
        h = make_canonical(simple4_algebra).cartan
        assert semisimple_parts_agree(simple4_algebra, h)
        assert derivation_check(simple4_algebra, h)

    def test_agreement_needs_canonical(self, auslander):
        with pytest.raises(NotCanonical):
            semisimple_parts_agree(auslander, span_of(auslander, {"e0": 1, "e1": 1}))

    def test_report(self, auslander):
        report = canonical_report(make_canonical(auslander, seed=auslander.element({"e0": 1, "e1": 1})))
        assert report.canonical
        assert report.single_factor
        assert report.word == [["0", "0", "1"]]
        assert report.graded and report.derivations and report.semisimple_parts_agree

    def test_requires_completeness(self, idempotent1):
        with pytest.raises(NotComplete):
            make_canonical(idempotent1)


class TestTransport:
    def test_single_step(self, auslander):
        E = unital_extension(auslander)
        x = E.point(auslander.element({"e1": -1}))
        word = transport_to_unit(E, x)
        assert word.factors == (auslander.basis_vector("e1"),)
        assert apply_word(E, word, x) == E.unit

    def test_inverse_word_returns(self, auslander):
        E = unital_extension(auslander)
        x = E.point(auslander.element({"e-1": 1}))
        word = transport_to_unit(E, x)
        assert word.factors == (auslander.element({"e-1": -1}),)
        assert apply_word(E, word.inverse(), E.unit) == x

    def test_point_must_be_affine(self, auslander):
        with pytest.raises(BadParameters):
            transport_to_unit(auslander, auslander.element({"e1": 1}))


class TestConjugation:
    def test_zero_root_point(self, auslander):
        E = unital_extension(auslander)
        x = zero_root_point(auslander, span_of(auslander, {"e0": 1, "e1": 1}))
        assert x == E.point(auslander.element({"e1": -1}))
        assert zero_root_point(auslander, span(auslander, "e0")) == E.unit

    @pytest.mark.parametrize("fixture", ["auslander", "simple4_algebra", "family5_three"])
    def test_word_moves_the_point_to_the_unit(self, fixture, request):
        A = request.getfixturevalue(fixture)
        form = make_canonical(A, seed=A.element({"e0": 1, "e1": 1}))
        E = unital_extension(A)
        assert apply_word(E, form.word, form.point) == E.unit
        assert adjoint_word(A, form.word, form.initial_cartan) == form.cartan

    def test_left_parts_follow_the_word(self, auslander):
        h = span_of(auslander, {"e0": 1, "e1": 1})
        e1 = auslander.basis_vector("e1")
        moved = adjoint_word(auslander, TransportWord((e1,)), h)
        assert moved == span(auslander, "e0")
        g = exp_nilpotent(left_operator(auslander, e1))
        before = root_decomposition(auslander, h, "L")
        after = root_decomposition(auslander, moved, "L")
        assert before.roots() == after.roots()
        assert before.part([-1]) == span_of(auslander, {"e-1": 1, "e0": -1})
        for p in before.parts:
            assert p.space.image(g) == after.part(p.root)

    def test_grading_automorphism_maps_canonical_parts(self, family5_three):
        A = family5_three
        D = grading_automorphism(A, 2)
        assert is_automorphism(A, D)
        seed = A.element({"e0": 1, "e1": 1})
        form = make_canonical(A, seed=seed)
        moved = make_canonical(A, seed=D.apply(seed))
        assert moved.cartan == form.cartan.image(D)
        for p in form.decomposition.parts:
            assert moved.decomposition.part(p.root) == p.space.image(D)
