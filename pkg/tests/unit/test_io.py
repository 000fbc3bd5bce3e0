"""Tests for algebra JSON files."""

import json

import pytest

from lsakit.algebra import algebra_from_dict, algebra_to_dict, dumps_algebra, load_algebra, save_algebra
from lsakit.classification import family5_mod
from lsakit.errors import AlgebraFormatError
from lsakit.field import NumericField


def test_round_trip_is_bit_exact(tmp_path, simple4_algebra):
    path = tmp_path / "simple4.json"
    save_algebra(simple4_algebra, path)
    loaded = load_algebra(path)
    assert loaded.same_table(simple4_algebra)
    assert dumps_algebra(loaded) == path.read_text(encoding="utf-8")


def test_gaussian_constants_survive(tmp_path):
    A = family5_mod("1+i", 2, "2i")
    path = tmp_path / "mod.json"
    save_algebra(A, path)
    assert load_algebra(path).same_table(A)


def test_only_nonzero_products_written(auslander):
    data = algebra_to_dict(auslander)
    assert data["dim"] == 3
    assert data["field"] == "exact"
    pairs = {(p["left"], p["right"]) for p in data["products"]}
    assert ("e1", "e-1") in pairs
    assert ("e-1", "e0") not in pairs


def test_field_override(auslander):
    F = NumericField(eps=1e-9)
    A = algebra_from_dict(algebra_to_dict(auslander), field=F)
    assert A.field is F
    assert A.table[2][0][1] == complex(1, 0)


def test_missing_file(tmp_path):
    with pytest.raises(AlgebraFormatError, match="No such file"):
        load_algebra(tmp_path / "absent.json")


def test_bad_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(AlgebraFormatError, match="not valid JSON"):
        load_algebra(path)


def test_top_level_must_be_object(tmp_path):
    path = tmp_path / "list.json"
    path.write_text("[]", encoding="utf-8")
    with pytest.raises(AlgebraFormatError):
        load_algebra(path)


@pytest.mark.parametrize(
    "data",
    [
        {"name": "a", "dim": 2, "basis": ["x"]},
        {"name": "a", "dim": 1, "basis": ["x"], "products": [{"left": "x", "right": "y", "result": []}]},
        {
            "name": "a",
            "dim": 1,
            "basis": ["x"],
            "products": [
                {"left": "x", "right": "x", "result": []},
                {"left": "x", "right": "x", "result": []},
            ],
        },
        {
            "name": "a",
            "dim": 1,
            "basis": ["x"],
            "products": [{"left": "x", "right": "x", "result": [{"basis": "x", "value": "abc"}]}],
        },
    ],
    ids=["dim-mismatch", "unknown-label", "repeated-product", "bad-scalar"],
)
def test_invalid_files_rejected(data):
    with pytest.raises(AlgebraFormatError):
        algebra_from_dict(json.loads(json.dumps(data)))
