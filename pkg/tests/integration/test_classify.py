"""End-to-end classification runs."""

import pytest

from lsakit.classification import classify, family_names
from lsakit.errors import BadParameters

pytestmark = pytest.mark.slow


def test_nothing_in_dimension_two():
    report = classify(2)

    assert report.candidates == 0
    assert report.families == []
    assert report.complete_list


def test_auslander_in_dimension_three():
    report = classify(3)

    assert family_names(report) == ["auslander3"]
    (family,) = report.families
    assert family.catalog == "auslander3"
    assert all(family.verification.values())


def test_one_class_in_dimension_four():
    report = classify(4)

    assert family_names(report) == ["simple4"]
    (family,) = report.families
    assert "e2 e-1 = (1) e1" in family.products
    assert "e-1 e2 = (2) e1" in family.products
    assert all(family.verification.values())
    assert report.complete_list


def test_dimension_five():
    report = classify(5, workers=2)

    assert sorted(family_names(report)) == ["family5", "family5_mod", "series(5)"]
    assert report.complete_list
    assert report.unsolved == []
    for family in report.families:
        assert all(family.verification.values()), family.name

    generic = next(f for f in report.families if f.name == "family5")
    assert generic.parameters[0] == "lam"
    assert "lam != 2" in generic.excluded

    line = next(f for f in report.families if f.name == "family5_mod")
    assert "2*alpha = beta + gamma" in line.constraints
    assert [p.split(":")[0] for p in line.points[:3]] == ["alpha=0", "beta=0", "gamma=0"]


def test_dimension_one_rejected():
    with pytest.raises(BadParameters):
        classify(1)
