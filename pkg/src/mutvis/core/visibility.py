"""
@file: visibility.py
@description: Проверки X-видимости, (тотальной) взаимной видимости, выпуклости и bypass-вершин
@dependencies: graph, errors
@created: 2026-10-18
"""

from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Tuple

from .errors import InvalidArgumentError
from .graph import Graph, VertexSet, distances_from


class VisibilityResult(NamedTuple):
    """Вердикт проверки; failing_pair - лексикографически первая невидимая пара"""
    visible: bool
    failing_pair: Optional[Tuple[int, int]] = None

    def __bool__(self) -> bool:
        return self.visible


@dataclass(frozen=True)
class BypassReport:
    """Bypass-вершины графа и их число bp(G)"""
    bypass_vertices: VertexSet

    @property
    def bp(self) -> int:
        return len(self.bypass_vertices)


def _blocked_flags(g: Graph, blockers: VertexSet) -> bytearray:
    flags = bytearray(g.vertex_count)
    for v in blockers:
        flags[v] = 1
    return flags


def _clean_sweep(g: Graph, source: int, blocked: bytearray) -> List[bool]:
    """
    Динамика по слоям BFS от source: w чисто достижима, если у нее есть сосед p
    на предыдущем слое и (p == source или p не в X и p чисто достижима).
    """
    n = g.vertex_count
    adjacency = g.adjacency
    dist = [-1] * n
    clean = [False] * n
    dist[source] = 0
    clean[source] = True
    frontier = [source]
    while frontier:
        next_frontier = []
        for p in frontier:
            passable = clean[p] and (p == source or not blocked[p])
            next_dist = dist[p] + 1
            for w in adjacency[p]:
                if dist[w] < 0:
                    dist[w] = next_dist
                    next_frontier.append(w)
                if passable and dist[w] == next_dist:
                    clean[w] = True
        frontier = next_frontier
    return clean


def visible_targets(g: Graph, source: int, X: VertexSet) -> List[bool]:
    """Для каждой вершины w: видны ли source и w относительно X (один проход)"""
    g.check_vertex(source)
    return _clean_sweep(g, source, _blocked_flags(g, X))


def is_pair_visible(g: Graph, u: int, v: int, X: VertexSet) -> bool:
    """Существует ли кратчайший u,v-путь без внутренних вершин из X"""
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        return True
    return _clean_sweep(g, u, _blocked_flags(g, X))[v]


def is_mutual_visibility_set(g: Graph, X: VertexSet) -> VisibilityResult:
    """Попарная X-видимость вершин X"""
    blocked = _blocked_flags(g, X)
    members = X.to_list()
    for i, u in enumerate(members[:-1]):
        clean = _clean_sweep(g, u, blocked)
        for v in members[i + 1:]:
            if not clean[v]:
                return VisibilityResult(False, (u, v))
    return VisibilityResult(True)


def is_total_mutual_visibility_set(g: Graph, X: VertexSet) -> VisibilityResult:
    """X-видимость всех пар вершин графа"""
    if not len(X):
        return VisibilityResult(True)
    blocked = _blocked_flags(g, X)
    n = g.vertex_count
    for u in range(n - 1):
        clean = _clean_sweep(g, u, blocked)
        for v in range(u + 1, n):
            if not clean[v]:
                return VisibilityResult(False, (u, v))
    return VisibilityResult(True)


def is_convex(g: Graph, H: VertexSet) -> bool:
    """Все кратчайшие пути между вершинами H лежат в H"""
    if not len(H):
        raise InvalidArgumentError("convexity is undefined for an empty vertex set")
    n = g.vertex_count
    adjacency = g.adjacency
    for u in H:
        dist = distances_from(g, u).dist
        # on_path[w]: w лежит на кратчайшем пути от u к какой-либо вершине H
        on_path = [w in H for w in range(n)]
        for w in sorted(range(n), key=dist.__getitem__, reverse=True):
            if not on_path[w] and any(on_path[x] for x in adjacency[w] if dist[x] == dist[w] + 1):
                return False
    return True


def bypass_vertices(g: Graph) -> BypassReport:
    """
    Вершина u не bypass, если есть соседи v', v'' на расстоянии 2,
    у которых u - единственный общий сосед (выпуклый P3 (v', u, v'')).
    """
    n = g.vertex_count
    if n < 2:
        raise InvalidArgumentError("bypass vertices need at least 2 vertices")
    masks = [0] * n
    for v in range(n):
        for w in g.neighbors(v):
            masks[v] |= 1 << w

    bypass = 0
    for u in range(n):
        row = g.neighbors(u)
        is_middle = False
        for i, a in enumerate(row):
            for b in row[i + 1:]:
                if (masks[a] >> b) & 1:
                    continue
                if (masks[a] & masks[b]).bit_count() == 1:
                    is_middle = True
                    break
            if is_middle:
                break
        if not is_middle:
            bypass |= 1 << u
    return BypassReport(VertexSet(n, bypass))


def has_zero_total_mv(g: Graph) -> bool:
    """mu_t(G) = 0 тогда и только тогда, когда bp(G) = 0"""
    return bypass_vertices(g).bp == 0
