"""
@file: butterfly.py
@description: Генератор бабочки BF(d), естественная маршрутизация, полоса уровней кратчайших путей
@dependencies: core.graph, core.labels, hypercube
@created: 2026-10-18
"""

import enum
from typing import List, Tuple

import structlog

from ..core.config import get_settings
from ..core.errors import InvalidArgumentError, InvalidDimensionError, ResourceGuardError
from ..core.graph import Graph, VertexSet
from ..core.labels import BFLabel, to_bits
from ..schemas.topology import TopologyKind, TopologySpec
from .hypercube import bit_mask

logger = structlog.get_logger(__name__)


class RouteDirection(str, enum.Enum):
    """Направление естественной маршрутизации"""
    TOP_DOWN = "top-down"    # [0,i] -> [d,j], биты слева направо
    BOTTOM_UP = "bottom-up"  # [d,i] -> [0,j], биты справа налево


def _check_dimension(d: int) -> None:
    if d < 1:
        raise InvalidDimensionError("d must be ≥ 1")
    limit = get_settings().butterfly_max_dimension
    if d > limit:
        raise ResourceGuardError(f"butterfly dimension {d} exceeds the guard {limit}")


def bf_index(d: int, level: int, column: int) -> int:
    """Нумерация: сначала уровень, затем номер столбца"""
    return level * (1 << d) + column


def gen_butterfly(d: int) -> Graph:
    """
    BF(d): прямые ребра [l,c]~[l+1,c] и перекрестные [l,c]~[l+1,c'],
    где c' отличается от c ровно в позиции l.
    """
    _check_dimension(d)
    size = 1 << d
    n = (d + 1) * size
    adjacency = [[] for _ in range(n)]
    for level in range(d):
        flip = bit_mask(d, level)
        for c in range(size):
            v = bf_index(d, level, c)
            for w in (bf_index(d, level + 1, c), bf_index(d, level + 1, c ^ flip)):
                adjacency[v].append(w)
                adjacency[w].append(v)
    labels = [BFLabel(level, to_bits(c, d)) for level in range(d + 1) for c in range(size)]
    logger.debug("butterfly generated", d=d, vertices=n)
    return Graph(n, adjacency, labels, TopologySpec(kind=TopologyKind.BUTTERFLY, d=d))


def _check_label(d: int, label: BFLabel) -> None:
    if len(label.column) != d or not 0 <= label.level <= d:
        raise InvalidArgumentError(f"{label} is not a vertex of BF({d})")


def bf_natural_route(d: int, i: str, j: str, direction: RouteDirection = RouteDirection.TOP_DOWN) -> List[BFLabel]:
    """
    Естественный маршрут длины d: сверху вниз из [0,i] в [d,j] (сравнение битов
    с самого левого) или снизу вверх из [d,i] в [0,j] (с самого правого).
    """
    if len(i) != d or len(j) != d:
        raise InvalidArgumentError(f"columns must have {d} bits")
    column = list(i)
    if direction == RouteDirection.TOP_DOWN:
        path = [BFLabel(0, i)]
        for level in range(d):
            column[level] = j[level]
            path.append(BFLabel(level + 1, "".join(column)))
    else:
        path = [BFLabel(d, i)]
        for level in range(d, 0, -1):
            column[level - 1] = j[level - 1]
            path.append(BFLabel(level - 1, "".join(column)))
    return path


def bf_level_span(d: int, u: BFLabel, v: BFLabel) -> Tuple[int, int]:
    """
    Полоса уровней [lo, hi], в которой лежит каждый кратчайший u,v-путь.
    Бит k меняется только ребром между уровнями k и k+1, поэтому при первом и
    последнем различающихся битах k', k'': lo = min(k', l_min), hi = max(k''+1, l_max).
    """
    _check_label(d, u)
    _check_label(d, v)
    low_level = min(u.level, v.level)
    high_level = max(u.level, v.level)
    differing = [k for k in range(d) if u.column[k] != v.column[k]]
    if not differing:
        return low_level, high_level
    return min(differing[0], low_level), max(differing[-1] + 1, high_level)


def bf_column(d: int, column: str) -> VertexSet:
    """Столбец A_c: все уровни одного столбца"""
    _check_dimension(d)
    value = int(column, 2)
    return VertexSet.from_indices((d + 1) << d, (bf_index(d, level, value) for level in range(d + 1)))


def bf_level(d: int, level: int) -> VertexSet:
    """Уровень L_l"""
    _check_dimension(d)
    if not 0 <= level <= d:
        raise InvalidArgumentError(f"level must lie in [0,{d}]")
    size = 1 << d
    return VertexSet.from_indices((d + 1) * size, (bf_index(d, level, c) for c in range(size)))


def bf_column_groups(d: int) -> List[VertexSet]:
    """Все столбцы BF(d) в порядке номеров"""
    return [bf_column(d, to_bits(c, d)) for c in range(1 << d)]


def bf_sub_butterflies(d: int) -> Tuple[VertexSet, VertexSet]:
    """
    Разбиение BF(d) без L_0 на две копии BF(d-1): уровни 1..d,
    левый бит столбца 0 (BF') или 1 (BF'').
    """
    _check_dimension(d)
    if d < 2:
        raise InvalidDimensionError("sub-butterflies need d ≥ 2")
    size = 1 << d
    half = size >> 1
    n = (d + 1) * size
    left = VertexSet.from_indices(n, (bf_index(d, lv, c) for lv in range(1, d + 1) for c in range(half)))
    right = VertexSet.from_indices(n, (bf_index(d, lv, c) for lv in range(1, d + 1) for c in range(half, size)))
    return left, right
