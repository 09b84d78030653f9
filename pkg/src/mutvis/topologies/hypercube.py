"""
@file: hypercube.py
@description: Генератор гиперкуба Q_d и его подкубы
@dependencies: core.graph, core.labels, core.config
@created: 2026-10-18
"""

from typing import Mapping

import structlog

from ..core.config import get_settings
from ..core.errors import InvalidArgumentError, InvalidDimensionError, ResourceGuardError
from ..core.graph import Graph, VertexSet
from ..core.labels import HypercubeLabel, to_bits
from ..schemas.topology import TopologyKind, TopologySpec

logger = structlog.get_logger(__name__)


def bit_mask(d: int, position: int) -> int:
    """Маска бита в позиции position (0 - самый левый, старший)"""
    return 1 << (d - 1 - position)


def gen_hypercube(d: int) -> Graph:
    """Q_d: 2^d вершин, ребра между строками на расстоянии Хэмминга 1"""
    if d < 1:
        raise InvalidDimensionError("d must be ≥ 1")
    limit = get_settings().hypercube_max_dimension
    if d > limit:
        raise ResourceGuardError(f"hypercube dimension {d} exceeds the guard {limit}")

    n = 1 << d
    adjacency = [[v ^ (1 << b) for b in range(d)] for v in range(n)]
    labels = [HypercubeLabel(to_bits(v, d)) for v in range(n)]
    logger.debug("hypercube generated", d=d, vertices=n)
    return Graph(n, adjacency, labels, TopologySpec(kind=TopologyKind.HYPERCUBE, d=d))


def hypercube_index(label: HypercubeLabel) -> int:
    return label.value


def hypercube_subcube(d: int, fixed: Mapping[int, int]) -> VertexSet:
    """Вершины подкуба, у которых биты в позициях fixed заданы"""
    for position, bit in fixed.items():
        if not 0 <= position < d or bit not in (0, 1):
            raise InvalidArgumentError(f"bad fixed coordinate {position}={bit}")
    care = 0
    want = 0
    for position, bit in fixed.items():
        care |= bit_mask(d, position)
        if bit:
            want |= bit_mask(d, position)
    n = 1 << d
    return VertexSet.from_indices(n, (v for v in range(n) if v & care == want))
