"""
Тесты графового ядра: VertexSet, Graph, BFS-примитивы, ввод-вывод
"""

import json

import networkx as nx
import pytest

from mutvis.core.errors import DisconnectedGraphError, GraphValidationError, InvalidArgumentError
from mutvis.core.graph import (
    Graph,
    VertexSet,
    cartesian_product,
    complete_graph,
    count_shortest_paths,
    cycle_graph,
    distances_from,
    geodesic_interval,
    induced_subgraph,
    path_graph,
)
from mutvis.core.graph_io import dump_graph_json, graph_to_dot, load_graph_json
from mutvis.topologies import gen_butterfly, gen_hypercube


class TestVertexSet:

    def test_iteration_is_ascending(self):
        X = VertexSet.from_indices(10, [7, 2, 5])
        assert list(X) == [2, 5, 7]
        assert len(X) == 3
        assert 5 in X and 4 not in X

    def test_set_algebra(self):
        A = VertexSet.from_indices(6, [0, 1, 2])
        B = VertexSet.from_indices(6, [2, 3])
        assert A.union(B).to_list() == [0, 1, 2, 3]
        assert A.intersection(B).to_list() == [2]
        assert A.difference(B).to_list() == [0, 1]
        assert A.intersection(B).issubset(A)
        assert A.add(5).to_list() == [0, 1, 2, 5]

    def test_out_of_range_rejected(self):
        with pytest.raises(InvalidArgumentError):
            VertexSet.from_indices(3, [3])

    def test_full(self):
        assert len(VertexSet.full(5)) == 5


class TestGraphValidation:

    def test_asymmetric_adjacency(self):
        with pytest.raises(GraphValidationError):
            Graph(2, [[1], []])

    def test_self_loop(self):
        with pytest.raises(GraphValidationError):
            Graph(1, [[0]])

    def test_duplicate_edge(self):
        with pytest.raises(GraphValidationError):
            Graph(2, [[1, 1], [0, 0]])

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            Graph.from_edges(4, [(0, 1), (2, 3)])

    def test_disconnected_is_a_validation_error(self):
        assert issubclass(DisconnectedGraphError, GraphValidationError)

    def test_edge_outside(self):
        with pytest.raises(GraphValidationError):
            Graph.from_edges(2, [(0, 2)])


class TestGraph:

    def test_from_edges(self):
        g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
        assert g.vertex_count == 4
        assert g.edge_count == 3
        assert g.neighbors(1) == (0, 2)
        assert g.degree(0) == 1
        assert list(g.edges()) == [(0, 1), (1, 2), (2, 3)]
        assert g.has_edge(2, 1)
        assert not g.has_edge(0, 3)

    def test_default_labels(self):
        g = path_graph(3)
        assert str(g.label(2)) == "2"
        assert g.index_of("1") == 1
        with pytest.raises(InvalidArgumentError):
            g.index_of("7")

    def test_networkx_round_trip(self):
        nx_graph = nx.petersen_graph()
        g = Graph.from_networkx(nx_graph)
        assert g.edge_count == 15
        assert nx.is_isomorphic(g.to_networkx(), nx_graph)

    def test_hypercube_labels(self):
        g = gen_hypercube(3)
        assert str(g.label(5)) == "101"
        assert g.index_of("110") == 6

    def test_equality_ignores_labels(self):
        assert Graph.from_edges(2, [(0, 1)]) == complete_graph(2)


class TestDistances:

    def test_path_distances(self):
        assert distances_from(path_graph(5), 0).dist == (0, 1, 2, 3, 4)

    def test_out_of_range_source(self):
        with pytest.raises(InvalidArgumentError):
            distances_from(path_graph(3), 3)

    def test_geodesic_interval_on_c4(self):
        assert geodesic_interval(cycle_graph(4), 0, 2).to_list() == [0, 1, 2, 3]
        assert geodesic_interval(cycle_graph(5), 0, 2).to_list() == [0, 1, 2]

    def test_count_shortest_paths(self):
        assert count_shortest_paths(cycle_graph(4), 0, 2) == 2
        q3 = gen_hypercube(3)
        assert count_shortest_paths(q3, q3.index_of("000"), q3.index_of("111")) == 6
        assert count_shortest_paths(path_graph(4), 0, 3) == 1

    def test_counts_match_networkx(self):
        g = gen_butterfly(2)
        nx_graph = g.to_networkx()
        for v in range(g.vertex_count):
            assert count_shortest_paths(g, 0, v) == len(list(nx.all_shortest_paths(nx_graph, 0, v)))


class TestConstructions:

    def test_induced_subgraph(self):
        g = cycle_graph(6)
        sub, old = induced_subgraph(g, g.vertex_set([1, 2, 3]))
        assert old == [1, 2, 3]
        assert list(sub.edges()) == [(0, 1), (1, 2)]

    def test_induced_subgraph_must_be_connected(self):
        g = cycle_graph(6)
        with pytest.raises(DisconnectedGraphError):
            induced_subgraph(g, g.vertex_set([0, 3]))

    def test_cartesian_product_of_edges_is_c4(self):
        square = cartesian_product(path_graph(2), path_graph(2))
        assert nx.is_isomorphic(square.to_networkx(), nx.cycle_graph(4))

    def test_cartesian_power_is_hypercube(self):
        k2 = complete_graph(2)
        q3 = cartesian_product(cartesian_product(k2, k2), k2)
        assert nx.is_isomorphic(q3.to_networkx(), gen_hypercube(3).to_networkx())

    def test_small_graph_guards(self):
        with pytest.raises(InvalidArgumentError):
            cycle_graph(2)
        with pytest.raises(InvalidArgumentError):
            path_graph(0)


class TestGraphIO:

    def test_generic_json_round_trip(self):
        g = cycle_graph(5)
        assert load_graph_json(dump_graph_json(g)) == g

    def test_topology_json_round_trip(self):
        g = gen_butterfly(2)
        loaded = load_graph_json(dump_graph_json(g))
        assert loaded == g
        assert loaded.topology == g.topology
        assert str(loaded.label(5)) == "[1,01]"

    def test_tampered_topology_document(self):
        doc = json.loads(dump_graph_json(gen_hypercube(2)))
        doc["edges"] = doc["edges"][:-1] + [[0, 3]]
        with pytest.raises(GraphValidationError):
            load_graph_json(json.dumps(doc))

    def test_malformed_document(self):
        with pytest.raises(GraphValidationError):
            load_graph_json('{"n": 2, "edges": [[0, 1]], "colour": "red"}')
        with pytest.raises(GraphValidationError):
            load_graph_json("not json")

    def test_label_count_mismatch(self):
        with pytest.raises(GraphValidationError):
            load_graph_json('{"n": 2, "edges": [[0, 1]], "labels": ["a"]}')

    def test_dot_uses_labels(self):
        dot = graph_to_dot(gen_hypercube(2), "Q2")
        assert dot.startswith('graph "Q2" {')
        assert '"00" -- "01";' in dot
        assert dot.count("--") == 4
