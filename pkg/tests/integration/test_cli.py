"""Tests for the lsakit command line."""

import json

import pytest

from lsakit.main import main


def test_check_complete_algebra(capsys):
    assert main(["check", "auslander3"]) == 0
    out = capsys.readouterr().out
    assert "left-symmetric: yes" in out
    assert "complete: yes" in out


def test_check_printed_table_fails(capsys):
    assert main(["check", "simple4_printed"]) == 1
    out = capsys.readouterr().out
    assert "left-symmetry: no (witness e-1, e2, e-1)" in out
    assert "note: constants of e2 e-1 and e-1 e2 exchanged" in out


def test_check_json(capsys):
    assert main(["check", "auslander3", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["completeness"]["verdict"] is True
    assert report["identities"]["algebra"] == "auslander3"


def test_check_numeric(capsys):
    assert main(["check", "family5", "--param", "lam=3", "--numeric"]) == 0


def test_decompose_verbose(capsys):
    assert main(["decompose", "auslander3", "--seed", "0,1,1", "--verbose"]) == 0
    out = capsys.readouterr().out
    assert "cartan: (0, 1, 0)" in out
    assert "transport 1: exp(0, 0, 1)" in out
    assert "rounds: 1" in out


def test_graph_dot(tmp_path, capsys):
    path = tmp_path / "simple4.dot"
    assert main(["graph", "simple4", "--kind", "l", "--dot", str(path)]) == 0
    dot = path.read_text(encoding="utf-8")
    assert dot.startswith('digraph "simple4 left"')
    assert '"2" -> "1";' in dot
    assert "s3: holds" in capsys.readouterr().out


def test_simple(capsys):
    assert main(["simple", "auslander3"]) == 0
    assert "simple: yes (exact)" in capsys.readouterr().out


def test_catalog_emit_round_trip(tmp_path, capsys):
    path = tmp_path / "mod.json"
    assert main(["catalog", "family5_mod", "--param", "alpha=1", "--param", "beta=0", "--param", "gamma=2", "--emit", str(path)]) == 0
    assert path.exists()
    assert main(["check", str(path)]) == 0


def test_catalog_listing(capsys):
    assert main(["catalog"]) == 0
    out = capsys.readouterr().out
    assert "family5(lam)" in out
    assert "series(n)" in out


@pytest.mark.slow
def test_classify_writes_dot_files(tmp_path, capsys):
    assert main(["classify", "--dim", "3", "--out", str(tmp_path)]) == 0
    assert (tmp_path / "01_auslander3.dot").exists()
    assert "family auslander3" in capsys.readouterr().out


@pytest.mark.parametrize(
    "argv",
    [
        ["frobnicate"],
        ["check"],
        ["graph", "auslander3", "--kind", "x"],
        ["check", "nowhere"],
        ["catalog", "family5", "--param", "lam"],
        ["decompose", "auslander3", "--seed", "1,2"],
    ],
    ids=["unknown-verb", "missing-source", "bad-kind", "unknown-source", "bad-param", "short-seed"],
)
def test_input_errors(argv, capsys):
    assert main(argv) == 2


def test_error_goes_to_stderr(capsys):
    assert main(["check", "nowhere"]) == 2
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "error:" in captured.err
