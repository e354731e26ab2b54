"""Unit tests for minuscule crystal graphs and the printed weight tables."""

from dataclasses import replace

import networkx as nx
import pytest

from app.domain.errors import NotFoundError, ValidationError
from app.domain.models.crystal import RootDatum, WeightTable
from app.domain.services.weyl import (
    bruhat_interval,
    build_crystal,
    crystal_for,
    has_unique_extremes,
    is_graded,
    is_self_dual,
    verify_appendix_tables,
)


def _table(tables: list[WeightTable], label: str) -> WeightTable:
    return next(t for t in tables if t.label == label)


class TestRootDatum:
    """Tests for the RootDatum model."""

    def test_cartan_matrix_of_e6(self) -> None:
        datum = RootDatum.of("E6")
        assert datum.rank == 6
        # node 2 hangs off node 4
        assert datum.cartan[1][3] == -1
        assert datum.cartan[0][1] == 0

    def test_unknown_type(self) -> None:
        with pytest.raises(NotFoundError, match="Unknown type"):
            RootDatum.of("F4")


class TestCrystalGraph:
    """Tests for building minuscule crystal graphs."""

    @pytest.mark.parametrize(
        ("type_label", "weight", "size", "top_length"),
        [("E6", "w1", 27, 16), ("E6", "w6", 27, 16), ("E7", "w7", 56, 27)],
    )
    def test_sizes(self, type_label: str, weight: str, size: int, top_length: int) -> None:
        graph = crystal_for(type_label, weight)
        assert len(graph) == size
        assert graph.source.length == 0
        assert graph.sink.length == top_length

    def test_source_is_the_highest_weight(self) -> None:
        graph = build_crystal(RootDatum.of("E6"), 1)
        assert graph.source.weight == (1, 0, 0, 0, 0, 0)
        assert graph.sink.weight == (0, 0, 0, 0, 0, -1)

    def test_vertices_are_numbered_by_length(self) -> None:
        graph = crystal_for("E7", "w7")
        lengths = [v.length for v in graph.vertices]
        assert lengths == sorted(lengths)
        assert [v.index for v in graph.vertices] == list(range(1, 57))

    @pytest.mark.parametrize(("type_label", "weight"), [("E6", "w1"), ("E7", "w7")])
    def test_structural_properties(self, type_label: str, weight: str) -> None:
        graph = crystal_for(type_label, weight)
        assert is_graded(graph)
        assert has_unique_extremes(graph)
        assert is_self_dual(graph)

    def test_duality_swaps_source_and_sink(self) -> None:
        for graph in (crystal_for("E6", "w1"), crystal_for("E7", "w7")):
            assert graph.datum.dual_weight(graph.source.weight) == graph.sink.weight

    def test_self_duality_respects_edge_labels(self) -> None:
        graph = crystal_for("E7", "w7")
        relabelled = graph.graph.copy()
        relabelled.edges[1, 2]["label"] = 6
        # the unlabelled digraphs stay isomorphic
        assert nx.is_isomorphic(relabelled, relabelled.reverse(copy=True))
        assert not is_self_dual(replace(graph, graph=relabelled))

    def test_apply_word_reads_right_to_left(self) -> None:
        graph = crystal_for("E6", "w1")
        vertex = graph.apply_word("31")
        assert vertex is not None
        assert vertex.length == 2
        assert graph.apply_word("13") is None

    def test_bruhat_interval(self) -> None:
        graph = crystal_for("E6", "w1")
        assert bruhat_interval(graph, graph.source) == frozenset({1})
        assert len(bruhat_interval(graph, graph.sink)) == 27

    def test_non_minuscule_weight(self) -> None:
        with pytest.raises(ValidationError, match="choose one of w1, w6"):
            crystal_for("E6", "w2")

    def test_malformed_weight(self) -> None:
        with pytest.raises(ValidationError, match="must look like"):
            crystal_for("E6", "omega1")

    def test_unknown_vertex(self) -> None:
        with pytest.raises(NotFoundError, match="no vertex"):
            crystal_for("E6", "w1").vertex(28)

    def test_dot_and_json(self) -> None:
        graph = crystal_for("E6", "w1")
        dot = graph.to_dot()
        assert dot.startswith('digraph "E6/w1" {')
        assert dot.count("->") == len(graph.edges())
        data = graph.to_json()
        assert len(data["vertices"]) == 27
        assert data["vertices"][0]["word"] == ""


class TestAppendixTables:
    """The packaged weight tables against the computed graphs."""

    def test_e6_table_matches(self, weight_tables: list[WeightTable]) -> None:
        table = _table(weight_tables, "E6/w1")
        report = verify_appendix_tables(crystal_for("E6", "w1"), table.rows)
        assert report.passed, report.mismatches
        assert report.matched == 27
        assert sorted(report.node_map.values()) == list(range(1, 28))

    def test_e7_slips_are_the_ledger_cells(self, weight_tables: list[WeightTable]) -> None:
        table = _table(weight_tables, "E7/w7")
        report = verify_appendix_tables(crystal_for("E7", "w7"), table.rows)
        assert report.rows == 56
        assert report.matched == 51
        cells = {(m.node, m.column) for m in report.mismatches}
        assert cells == {(11, "weight"), (13, "word"), (16, "weight"), (17, "word"), (29, "weight")}
        assert cells == set(table.ledger)

    def test_e7_printed_words_off_the_graph(self) -> None:
        graph = crystal_for("E7", "w7")
        assert graph.apply_word("5434567") is None
        assert graph.apply_word("6342134567") is None
        fixed = graph.apply_word("5342134567")
        assert fixed is not None
        assert fixed.weight == (0, 0, -1, 1, -1, 1, 0)

    def test_e7_node_three_coordinate_slips(self) -> None:
        graph = crystal_for("E7", "w7")
        vertex = graph.apply_word("4324567")
        assert vertex is not None
        assert vertex.weight == (1, 0, 0, -1, 1, 0, 0)

    def test_row_lookup(self, weight_tables: list[WeightTable]) -> None:
        table = _table(weight_tables, "E6/w1")
        assert table.row(3).word == "31"
        with pytest.raises(NotFoundError, match="no node"):
            table.row(99)
