"""Identity and completeness checks across the catalog and perturbed tables."""

import pytest

from lsakit.algebra import (
    check_L_representation,
    check_lie_admissible,
    check_LR_identity,
    direct_sum,
    is_left_symmetric,
    perturb,
    rescale,
    verify_left_degenerate,
)
from lsakit.classification import catalog, list_catalog
from lsakit.completeness import check_all_criteria, identity_report
from lsakit.ideals import is_simple

LEFT_SYMMETRIC = [e.name for e in list_catalog() if e.name != "simple4_printed"]


@pytest.mark.parametrize("name", LEFT_SYMMETRIC)
def test_catalog_entry_is_simple_and_complete(name):
    A = catalog(name)

    assert is_left_symmetric(A)
    assert check_L_representation(A)
    assert check_LR_identity(A)
    report = check_all_criteria(A)
    assert report.verdict
    assert report.consistent()
    assert verify_left_degenerate(A)
    assert is_simple(A).simple


@pytest.mark.parametrize("name", LEFT_SYMMETRIC)
def test_rescaled_entries_keep_every_property(name):
    A = catalog(name)
    B = rescale(A, list(range(2, A.dim + 2)))

    assert identity_report(B).all_hold()
    assert check_all_criteria(B).verdict


@pytest.mark.parametrize("name", LEFT_SYMMETRIC)
@pytest.mark.parametrize("seed", range(20))
def test_perturbed_tables_agree_across_forms(name, seed):
    """The three forms of left symmetry accept or reject together."""
    A = perturb(catalog(name), seed)
    form = bool(is_left_symmetric(A))

    assert bool(check_L_representation(A)) == form
    assert bool(check_LR_identity(A)) == form
    if form:
        assert check_lie_admissible(A)


def test_sum_of_catalog_entries():
    S = direct_sum(catalog("auslander3"), catalog("simple4"))

    assert is_left_symmetric(S)
    assert check_all_criteria(S).verdict
    assert not is_simple(S).simple
