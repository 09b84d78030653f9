"""
Общие фикстуры и стратегии hypothesis для тестов MutVis
"""

import networkx as nx
import pytest
from hypothesis import strategies as st

from mutvis.core.config import settings
from mutvis.core.graph import Graph, VertexSet, distances_from


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 10) -> Graph:
    """Случайный связный граф: остовное дерево плюс случайные ребра"""
    n = draw(st.integers(min_n, max_n))
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, n)}
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=2 * n))
    for a, b in extra:
        if a != b:
            edges.add((min(a, b), max(a, b)))
    return Graph.from_edges(n, sorted(edges))


@st.composite
def graphs_with_subsets(draw, max_n: int = 10):
    g = draw(connected_graphs(max_n=max_n))
    members = draw(st.sets(st.integers(0, g.vertex_count - 1)))
    return g, VertexSet.from_indices(g.vertex_count, members)


def oracle_pair_visible(g: Graph, u: int, v: int, X: VertexSet) -> bool:
    """Удалить X без u, v и сравнить расстояние с исходным"""
    if u == v:
        return True
    nx_graph = g.to_networkx()
    nx_graph.remove_nodes_from(w for w in X if w not in (u, v))
    if not nx.has_path(nx_graph, u, v):
        return False
    return nx.shortest_path_length(nx_graph, u, v) == distances_from(g, u)[v]


@pytest.fixture
def debug_mode(monkeypatch):
    """Включить самопроверку конструкций"""
    monkeypatch.setattr(settings, "debug", True)
    yield settings
