"""Tests for root graphs, their duality and the property checkers."""

import pytest

from lsakit.algebra import direct_sum
from lsakit.classification import series
from lsakit.errors import BadParameters, NotOneDimensional
from lsakit.graphs import (
    RootGraph,
    build_graph,
    check_properties,
    check_simple_properties,
    count_r5_paths,
    dual_graph,
    graded_structure,
    graph_from_structure,
    graph_model,
    graph_to_dict,
    support_from_graph,
    to_dot,
)


def edges(G):
    return set(G.edge_labels())


def with_loops(pairs, loops):
    return set(pairs) | {(v, v) for v in loops}


class TestBuild:
    def test_simple4_left_graph(self, simple4_algebra):
        G = build_graph(simple4_algebra)
        assert [str(v) for v in G.vertices] == ["-1", "0", "1", "2"]
        assert edges(G) == with_loops(
            [("-1", "0"), ("1", "0"), ("-1", "1"), ("2", "1")], ["-1", "1", "2"]
        )

    def test_series_left_graph(self):
        G = build_graph(series(5))
        assert edges(G) == with_loops(
            [("-1", "0"), ("1", "0"), ("2", "1"), ("3", "2"), ("-1", "1"), ("-1", "2")],
            ["-1", "1", "2", "3"],
        )

    def test_auslander_right_graph(self, auslander):
        G = build_graph(auslander, kind="right")
        assert edges(G) == {("0", "-1"), ("0", "1"), ("1", "0"), ("-1", "0")}

    def test_coefficients(self, simple4_algebra):
        model = graph_model(build_graph(simple4_algebra))
        assert model.coefficients["2->1"] == "2"
        assert model.coefficients["-1->1"] == "1"
        assert model.coefficients["2->2"] == "2"

    def test_to_dict(self, auslander):
        data = graph_to_dict(build_graph(auslander, kind="right"))
        assert data["kind"] == "right"
        assert data["vertices"] == ["-1", "0", "1"]
        assert {tuple(e) for e in data["edges"]} == {("0", "-1"), ("0", "1"), ("1", "0"), ("-1", "0")}

    def test_structure_constants(self, simple4_algebra):
        structure = graded_structure(simple4_algebra)
        assert structure.c(-1, 2) == 2
        assert structure.c(2, -1) == 1
        assert structure.c(1, 1) == 0

    def test_abelian_summand_is_not_one_dimensional(self, auslander, zero2):
        with pytest.raises(NotOneDimensional):
            build_graph(direct_sum(auslander, zero2))

    def test_edges_must_stay_on_vertices(self):
        with pytest.raises(BadParameters):
            RootGraph.create("left", [0, 1], [(1, 2)])
        with pytest.raises(BadParameters):
            RootGraph.create("up", [0], [])


class TestDuality:
    @pytest.mark.parametrize("fixture", ["auslander", "simple4_algebra", "family5_three"])
    def test_left_and_right_determine_each_other(self, fixture, request):
        left, right = graph_from_structure(request.getfixturevalue(fixture))
        assert dual_graph(left) == right
        assert dual_graph(right) == left

    def test_support_round_trip(self, simple4_algebra):
        structure = graded_structure(simple4_algebra)
        left, right = graph_from_structure(simple4_algebra)
        assert support_from_graph(left) == structure.support()
        assert support_from_graph(right) == structure.support()


class TestProperties:
    @pytest.mark.parametrize("fixture", ["auslander", "simple4_algebra", "family5_three"])
    def test_catalog_graphs_pass(self, fixture, request):
        A = request.getfixturevalue(fixture)
        left, right = graph_from_structure(A)
        assert check_properties(left).all_hold()
        assert check_properties(right).all_hold()
        assert check_simple_properties(left, right, A).all_hold()

    def test_series_graphs_pass(self):
        left, right = graph_from_structure(series(5))
        assert check_properties(left).all_hold()
        assert check_properties(right).all_hold()

    def test_missing_loop(self):
        G = RootGraph.create("left", [-1, 0, 1], [(-1, 0), (1, 0), (-1, -1)])
        report = check_properties(G)
        assert report.failed() == ["l1"]
        assert report.get("l1").witness == ["1"]

    def test_edge_out_of_zero(self):
        G = RootGraph.create("left", [0, 1], [(0, 1), (1, 1)])
        assert "l3" in check_properties(G).failed()

    def test_difference_not_a_root(self):
        G = RootGraph.create("left", [0, 1, 3], [(1, 3), (1, 1), (3, 3)])
        report = check_properties(G)
        assert report.get("l2").witness == ["1", "3"]

    def test_cycle(self):
        G = RootGraph.create("left", [-1, 0, 1, 2], [(1, 2), (2, 1), (-1, -1), (1, 1), (2, 2)])
        assert not check_properties(G).get("l5").holds

    def test_one_sided_edge_into_zero(self):
        G = RootGraph.create("left", [-1, 0, 1], [(1, 0), (-1, -1), (1, 1)])
        assert check_properties(G).get("l4").witness == ["1"]

    def test_right_loop(self):
        G = RootGraph.create("right", [-1, 0, 1], [(0, -1), (0, 1), (1, 1)])
        assert check_properties(G).get("r3").witness == ["1", "1"]

    def test_single_r5_path(self):
        G = RootGraph.create("right", [-1, 0, 1, 2], [(0, 2), (2, 1), (1, 0)])
        assert count_r5_paths(G, -1) == [0]
        report = check_properties(G)
        assert report.get("r5").witness == ["0", "-1"]

    def test_simple_properties_need_a_pair(self, simple4_algebra):
        left, right = graph_from_structure(simple4_algebra)
        with pytest.raises(BadParameters):
            check_simple_properties(right, left)

    def test_unreachable_zero(self):
        left = RootGraph.create("left", [0, 1, 2], [(1, 1), (2, 2), (1, 2)])
        right = dual_graph(left)
        report = check_simple_properties(left, right)
        assert not report.get("s2").holds


class TestDot:
    def test_deterministic_output(self, simple4_algebra):
        G = build_graph(simple4_algebra)
        text = to_dot(G, "simple4 left")
        assert text.startswith('digraph "simple4 left" {')
        assert '  "2" -> "1";' in text
        assert text == to_dot(build_graph(simple4_algebra), "simple4 left")
        assert text.endswith("}\n")
