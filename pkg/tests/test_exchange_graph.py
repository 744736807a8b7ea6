"""Тесты для модуля графа обменов."""

import json

import pytest

from bistellar_cluster.bistellar import complexes_equal, local_face_sets, local_frame
from bistellar_cluster.errors import BudgetExceeded, NotMiddleMove, ParseError
from bistellar_cluster.exchange_graph import (
    ExchangeGraph,
    enumerate_class,
    from_structured,
    pair_set,
    to_dot,
    to_structured,
)
from bistellar_cluster.fixtures import load_fixture


@pytest.fixture(scope="module")
def sphere5_graph():
    return enumerate_class(load_fixture("sphere5"))


class TestEnumerateClass:
    """Тесты перечисления класса."""

    def test_sphere5_counts(self, sphere5_graph):
        assert len(sphere5_graph.nodes) == 10
        assert len(sphere5_graph.edges) == 15
        assert len(pair_set(sphere5_graph)) == 30

    def test_all_degrees_three(self, sphere5_graph):
        assert sphere5_graph.degrees() == [3] * 10

    def test_connected(self, sphere5_graph):
        assert sphere5_graph.is_connected()

    def test_first_node_is_input(self, sphere5_graph):
        assert sphere5_graph.nodes[0] == load_fixture("sphere5")
        assert sphere5_graph.depths[0] == 0

    def test_nodes_are_bipyramids(self, sphere5_graph):
        for node in sphere5_graph.nodes:
            assert node.vertices == (1, 2, 3, 4, 5)
            assert len(node.facets) == 6
        keys = {node.facets for node in sphere5_graph.nodes}
        assert len(keys) == 10

    def test_edges_ordered(self, sphere5_graph):
        assert sphere5_graph.edges == sorted(sphere5_graph.edges)
        assert all(source < target for source, target, _ in sphere5_graph.edges)

    def test_node_pairs_of_first_node(self, sphere5_graph):
        pairs = [str(p) for p in sphere5_graph.node_pairs(0)]
        assert pairs == ["(1,2)|(4,5)", "(1,3)|(4,5)", "(2,3)|(4,5)"]

    def test_d_sets_disjoint_within_node(self, sphere5_graph):
        for i, node in enumerate(sphere5_graph.nodes):
            seen = set()
            for pair in sphere5_graph.node_pairs(i):
                d_alpha = set(local_face_sets(local_frame(node, pair)).d_alpha)
                assert not seen & d_alpha
                seen |= d_alpha

    def test_pair_set_closed_under_inverse(self, sphere5_graph):
        pairs = pair_set(sphere5_graph)
        assert all(p.inverse() in pairs for p in pairs)

    def test_deterministic(self, sphere5_graph):
        assert enumerate_class(load_fixture("sphere5")) == sphere5_graph

    def test_depths_non_decreasing(self, sphere5_graph):
        assert sphere5_graph.depths == sorted(sphere5_graph.depths)

    def test_rigid_class(self):
        graph = enumerate_class(load_fixture("boundary_delta5"))
        assert len(graph.nodes) == 1
        assert graph.edges == []
        assert pair_set(graph) == set()

    def test_odd_dimension(self):
        with pytest.raises(NotMiddleMove):
            enumerate_class(load_fixture("boundary_delta4"))

    def test_budget_exceeded(self):
        with pytest.raises(BudgetExceeded) as info:
            enumerate_class(load_fixture("sphere5"), node_cap=5)
        assert info.value.cap == 5

    def test_budget_must_be_positive(self):
        with pytest.raises(BudgetExceeded):
            enumerate_class(load_fixture("sphere5"), node_cap=0)

    def test_exact_budget_is_enough(self):
        graph = enumerate_class(load_fixture("sphere5"), node_cap=10)
        assert len(graph.nodes) == 10

    def test_networkx_view(self, sphere5_graph):
        view = sphere5_graph.as_networkx()
        assert view.number_of_nodes() == 10
        assert view.number_of_edges() == 15
        assert view.nodes[0]["depth"] == 0


class TestExport:
    """Тесты экспорта графа."""

    def test_structured_round_trip(self, sphere5_graph):
        document = json.loads(json.dumps(to_structured(sphere5_graph)))
        restored = from_structured(document)
        assert restored == sphere5_graph
        for first, second in zip(restored.nodes, sphere5_graph.nodes):
            assert complexes_equal(first, second)

    def test_structured_fields(self, sphere5_graph):
        document = to_structured(sphere5_graph)
        assert document["dimension"] == 2
        assert len(document["nodes"]) == 10
        first = document["edges"][0]
        assert set(first) == {"source", "target", "alpha", "beta"}
        assert first["source"] == 0
        assert first["beta"] == [4, 5]

    def test_broken_document(self):
        with pytest.raises(ParseError):
            from_structured({"nodes": []})

    def test_dot_text(self, sphere5_graph):
        source = to_dot(sphere5_graph)
        assert "graph exchange_graph" in source
        assert source.count(" -- ") == 15
        assert "(1,2)|(4,5)" in source

    def test_empty_graph_repr(self):
        assert repr(ExchangeGraph([], [])) == "ExchangeGraph(nodes=0, edges=0)"
        assert not ExchangeGraph([], []).is_connected()
