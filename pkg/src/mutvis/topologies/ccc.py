"""
@file: ccc.py
@description: Генератор cube-connected cycles CCC_d и естественная маршрутизация (расстояние h + k)
@dependencies: core.graph, core.labels, hypercube
@created: 2026-10-18
"""

from typing import Mapping

import structlog

from ..core.config import get_settings
from ..core.errors import InvalidArgumentError, InvalidDimensionError, ResourceGuardError
from ..core.graph import Graph, VertexSet
from ..core.labels import CCCLabel, to_bits
from ..schemas.topology import TopologyKind, TopologySpec
from .hypercube import bit_mask

logger = structlog.get_logger(__name__)


def _check_dimension(d: int) -> None:
    if d < 3:
        raise InvalidDimensionError("d must be ≥ 3")
    limit = get_settings().ccc_max_dimension
    if d > limit:
        raise ResourceGuardError(f"CCC dimension {d} exceeds the guard {limit}")


def ccc_index(d: int, level: int, x: int) -> int:
    """Нумерация: сначала уровень, затем номер строки x"""
    return level * (1 << d) + x


def gen_ccc(d: int) -> Graph:
    """CCC_d: циклические ребра (тот же x, соседние уровни) и ребра гиперкуба ([l,x]~[l,x(l)])"""
    _check_dimension(d)
    size = 1 << d
    n = d * size
    adjacency = [[] for _ in range(n)]
    labels = [None] * n
    for level in range(d):
        flip = bit_mask(d, level)
        for x in range(size):
            v = ccc_index(d, level, x)
            adjacency[v] = [
                ccc_index(d, (level + 1) % d, x),
                ccc_index(d, (level - 1) % d, x),
                ccc_index(d, level, x ^ flip),
            ]
            labels[v] = CCCLabel(level, to_bits(x, d))
    logger.debug("ccc generated", d=d, vertices=n)
    return Graph(n, adjacency, labels, TopologySpec(kind=TopologyKind.CCC, d=d))


def _line_cover_cost(start: int, end: int, low: int, high: int) -> int:
    """Минимальная прогулка по прямой от start до end, покрывающая [low, high]"""
    return (high - low) + min((start - low) + (high - end), (high - start) + (end - low))


def cycle_cover_walk(d: int, start: int, end: int, required: set) -> int:
    """
    k: длина кратчайшей прогулки по циклу 0..d-1 от start до end,
    посещающей все индексы required. Перебор развернутых интервалов [low, high].
    """
    best = None
    for wraps in (-1, 0, 1):
        lifted_end = end + wraps * d
        lo_bound = min(start, lifted_end)
        hi_bound = max(start, lifted_end)
        for low in range(hi_bound - d, lo_bound + 1):
            for high in range(hi_bound, low + d + 1):
                span = high - low
                if span < d - 1 and any((r - low) % d > span for r in required):
                    continue
                cost = _line_cover_cost(start, lifted_end, low, high)
                if best is None or cost < best:
                    best = cost
                break  # большие high только дороже при том же low
    return best


def ccc_natural_distance(d: int, u: CCCLabel, v: CCCLabel) -> int:
    """Расстояние h + k между [l,x] и [l',x'] по естественной маршрутизации"""
    if len(u.bits) != d or len(v.bits) != d:
        raise InvalidArgumentError(f"CCC labels must carry {d} bits")
    if not (0 <= u.level < d and 0 <= v.level < d):
        raise InvalidArgumentError(f"CCC levels must lie in [0,{d - 1}]")
    differing = {i for i in range(d) if u.bits[i] != v.bits[i]}
    return len(differing) + cycle_cover_walk(d, u.level, v.level, differing)


def ccc_subcube_supervertices(d: int, fixed: Mapping[int, int]) -> VertexSet:
    """Все вершины супервершин [*, x], где x лежит в подкубе с фиксированными битами"""
    _check_dimension(d)
    care = 0
    want = 0
    for position, bit in fixed.items():
        if not 0 <= position < d or bit not in (0, 1):
            raise InvalidArgumentError(f"bad fixed coordinate {position}={bit}")
        care |= bit_mask(d, position)
        if bit:
            want |= bit_mask(d, position)
    size = 1 << d
    return VertexSet.from_indices(
        d * size,
        (ccc_index(d, level, x) for level in range(d) for x in range(size) if x & care == want),
    )
