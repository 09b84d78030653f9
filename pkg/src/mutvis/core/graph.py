"""
@file: graph.py
@description: Неизменяемый связный неориентированный граф, множества вершин, BFS-примитивы
@dependencies: networkx (конвертация), labels, errors
@created: 2026-10-18
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import TYPE_CHECKING, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .errors import DisconnectedGraphError, GraphValidationError, InvalidArgumentError
from .labels import PlainLabel, VertexLabel

if TYPE_CHECKING:
    import networkx as nx

    from ..schemas.topology import TopologySpec


class VertexSet:
    """
    Множество вершин как битовая маска по индексам.
    Неизменяемо: операции возвращают новые множества.
    """

    __slots__ = ("_n", "_mask", "_size")

    def __init__(self, vertex_count: int, mask: int = 0):
        if mask < 0 or mask >> vertex_count:
            raise InvalidArgumentError(f"vertex mask exceeds vertex_count={vertex_count}")
        self._n = vertex_count
        self._mask = mask
        self._size = mask.bit_count()

    @classmethod
    def from_indices(cls, vertex_count: int, indices: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in indices:
            if not 0 <= v < vertex_count:
                raise InvalidArgumentError(f"vertex {v} out of range [0,{vertex_count})")
            mask |= 1 << v
        return cls(vertex_count, mask)

    @classmethod
    def full(cls, vertex_count: int) -> "VertexSet":
        return cls(vertex_count, (1 << vertex_count) - 1)

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def mask(self) -> int:
        return self._mask

    def __len__(self) -> int:
        return self._size

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self._n and bool((self._mask >> v) & 1)

    def __iter__(self) -> Iterator[int]:
        mask = self._mask
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self._n == other._n and self._mask == other._mask

    def __hash__(self) -> int:
        return hash((self._n, self._mask))

    def __repr__(self) -> str:
        return f"VertexSet({self.to_list()})"

    def to_list(self) -> List[int]:
        return list(self)

    def add(self, v: int) -> "VertexSet":
        if not 0 <= v < self._n:
            raise InvalidArgumentError(f"vertex {v} out of range [0,{self._n})")
        return VertexSet(self._n, self._mask | (1 << v))

    def union(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self._n, self._mask | other._mask)

    def intersection(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self._n, self._mask & other._mask)

    def difference(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self._n, self._mask & ~other._mask)

    def issubset(self, other: "VertexSet") -> bool:
        return self._mask & ~other._mask == 0


@dataclass(frozen=True)
class DistanceRow:
    """Расстояния BFS от вершины source"""
    source: int
    dist: Tuple[int, ...]

    def __getitem__(self, v: int) -> int:
        return self.dist[v]


class Graph:
    """
    Неизменяемый неориентированный связный граф со списками смежности.

    Инварианты проверяются при построении: симметрия, нет петель и кратных
    ребер, граф связен.
    """

    __slots__ = ("_n", "_adjacency", "_labels", "_topology", "_label_index")

    def __init__(
        self,
        vertex_count: int,
        adjacency: Sequence[Iterable[int]],
        labels: Optional[Sequence[VertexLabel]] = None,
        topology: Optional["TopologySpec"] = None,
    ):
        if vertex_count < 0:
            raise GraphValidationError("vertex_count must be non-negative")
        if len(adjacency) != vertex_count:
            raise GraphValidationError(f"adjacency has {len(adjacency)} rows, expected {vertex_count}")
        if labels is not None and len(labels) != vertex_count:
            raise GraphValidationError(f"labels has {len(labels)} entries, expected {vertex_count}")

        rows = tuple(tuple(sorted(row)) for row in adjacency)
        self._n = vertex_count
        self._adjacency = rows
        self._labels = tuple(labels) if labels is not None else None
        self._topology = topology
        self._label_index: Optional[Dict[str, int]] = None
        self._validate()

    def _validate(self) -> None:
        n = self._n
        neighbor_sets = [set(row) for row in self._adjacency]
        for u, row in enumerate(self._adjacency):
            if len(neighbor_sets[u]) != len(row):
                raise GraphValidationError(f"duplicate edge at vertex {u}")
            for v in row:
                if not 0 <= v < n:
                    raise GraphValidationError(f"edge ({u},{v}) points outside the graph")
                if v == u:
                    raise GraphValidationError(f"self-loop at vertex {u}")
                if u not in neighbor_sets[v]:
                    raise GraphValidationError(f"adjacency is not symmetric on edge ({u},{v})")
        if n and min(distances_from_unchecked(self, 0)) < 0:
            raise DisconnectedGraphError("graph is disconnected")

    # Конструкторы

    @classmethod
    def from_edges(
        cls,
        vertex_count: int,
        edges: Iterable[Tuple[int, int]],
        labels: Optional[Sequence[VertexLabel]] = None,
        topology: Optional["TopologySpec"] = None,
    ) -> "Graph":
        """Построить граф по списку ребер"""
        adjacency: List[List[int]] = [[] for _ in range(vertex_count)]
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphValidationError(f"edge ({u},{v}) points outside the graph")
            adjacency[u].append(v)
            adjacency[v].append(u)
        return cls(vertex_count, adjacency, labels, topology)

    @classmethod
    def from_networkx(cls, nx_graph: "nx.Graph") -> "Graph":
        """Построить граф из networkx.Graph; имена узлов становятся метками"""
        nodes = list(nx_graph.nodes())
        position = {node: i for i, node in enumerate(nodes)}
        edges = [(position[a], position[b]) for a, b in nx_graph.edges()]
        labels = [PlainLabel(str(node)) for node in nodes]
        return cls.from_edges(len(nodes), edges, labels)

    def to_networkx(self) -> "nx.Graph":
        """Преобразовать в networkx.Graph с индексами вершин как узлами"""
        import networkx as nx

        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self._n))
        nx_graph.add_edges_from(self.edges())
        return nx_graph

    # Доступ

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return sum(len(row) for row in self._adjacency) // 2

    @property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        return self._adjacency

    @property
    def labels(self) -> Optional[Tuple[VertexLabel, ...]]:
        return self._labels

    @property
    def topology(self) -> Optional["TopologySpec"]:
        return self._topology

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjacency[u]

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Ребра (u, v) с u < v в лексикографическом порядке"""
        for u, row in enumerate(self._adjacency):
            for v in row:
                if u < v:
                    yield u, v

    def label(self, v: int) -> VertexLabel:
        if self._labels is None:
            return PlainLabel(str(v))
        return self._labels[v]

    def index_of(self, label: Union[VertexLabel, str]) -> int:
        """Индекс вершины по метке или ее строковой записи"""
        if self._label_index is None:
            self._label_index = {str(self.label(v)): v for v in range(self._n)}
        key = str(label)
        if key not in self._label_index:
            raise InvalidArgumentError(f"unknown vertex label {key!r}")
        return self._label_index[key]

    def vertex_set(self, indices: Iterable[int] = ()) -> VertexSet:
        return VertexSet.from_indices(self._n, indices)

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise InvalidArgumentError(f"vertex {v} out of range [0,{self._n})")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adjacency == other._adjacency

    def __hash__(self) -> int:
        return hash((self._n, self._adjacency))

    def __repr__(self) -> str:
        name = str(self._topology) if self._topology is not None else "Graph"
        return f"<{name} n={self._n} m={self.edge_count}>"


def distances_from_unchecked(g: Graph, u: int) -> List[int]:
    """BFS-расстояния от u; -1 для недостижимых вершин"""
    dist = [-1] * g.vertex_count
    dist[u] = 0
    queue = deque([u])
    adjacency = g.adjacency
    while queue:
        x = queue.popleft()
        for y in adjacency[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def distances_from(g: Graph, u: int) -> DistanceRow:
    """Точные расстояния от u до всех вершин"""
    g.check_vertex(u)
    dist = distances_from_unchecked(g, u)
    if min(dist) < 0:
        raise DisconnectedGraphError(f"vertex {dist.index(-1)} unreachable from {u}")
    return DistanceRow(u, tuple(dist))


def geodesic_interval(g: Graph, u: int, v: int) -> VertexSet:
    """I(u,v): все вершины, лежащие на каком-либо кратчайшем u,v-пути"""
    du = distances_from(g, u)
    dv = distances_from(g, v)
    target = du[v]
    return VertexSet.from_indices(
        g.vertex_count, (w for w in range(g.vertex_count) if du[w] + dv[w] == target)
    )


def count_shortest_paths(g: Graph, u: int, v: int) -> int:
    """Число кратчайших u,v-путей (динамика по слоям BFS)"""
    dist = distances_from(g, u).dist
    order = sorted(range(g.vertex_count), key=dist.__getitem__)
    counts = [0] * g.vertex_count
    counts[u] = 1
    for w in order:
        if w == u:
            continue
        counts[w] = sum(counts[p] for p in g.neighbors(w) if dist[p] == dist[w] - 1)
    return counts[v]


def induced_subgraph(g: Graph, vertices: VertexSet) -> Tuple[Graph, List[int]]:
    """
    G[H] с перенумерацией. Возвращает граф и список old_index по новым индексам.
    Несвязный G[H] отвергается (инвариант Graph).
    """
    old_indices = vertices.to_list()
    position = {old: new for new, old in enumerate(old_indices)}
    adjacency = [
        [position[w] for w in g.neighbors(old) if w in position] for old in old_indices
    ]
    labels = [g.label(old) for old in old_indices] if g.labels is not None else None
    return Graph(len(old_indices), adjacency, labels), old_indices


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """G □ H, вершина (a, b) получает индекс a * n(H) + b"""
    nh = h.vertex_count
    edges: List[Tuple[int, int]] = []
    for a in range(g.vertex_count):
        for b1, b2 in h.edges():
            edges.append((a * nh + b1, a * nh + b2))
    for a1, a2 in g.edges():
        for b in range(nh):
            edges.append((a1 * nh + b, a2 * nh + b))
    labels = [
        PlainLabel(f"({g.label(a)},{h.label(b)})") for a in range(g.vertex_count) for b in range(nh)
    ]
    return Graph.from_edges(g.vertex_count * nh, edges, labels)


# Малые эталонные графы

def complete_graph(n: int) -> Graph:
    """K_n"""
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n: int) -> Graph:
    """C_n, n >= 3"""
    if n < 3:
        raise InvalidArgumentError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    """P_n на n вершинах"""
    if n < 1:
        raise InvalidArgumentError("a path needs at least 1 vertex")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))
