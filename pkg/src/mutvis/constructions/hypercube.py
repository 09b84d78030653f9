"""
@file: hypercube.py
@description: Множества взаимной видимости в Q_d: средние слои и сохраненные оптимумы d <= 5
@dependencies: base, core.labels
@created: 2026-10-18
"""

from itertools import combinations
from typing import Dict, Iterable, List, Tuple

from ..core.config import constants
from ..core.errors import InvalidDimensionError, UnsupportedError
from ..core.graph import VertexSet
from ..core.labels import to_bits
from ..schemas.certificate import SetKind, VisibilityCertificate
from ..schemas.topology import TopologyKind, TopologySpec
from .base import emit_certificate

# Оптимальные множества, найденные исчерпывающим поиском
STORED_HYPERCUBE_OPTIMA: Dict[int, Tuple[str, ...]] = {
    1: ("0", "1"),
    2: ("00", "01", "10"),
    3: ("000", "001", "100", "110", "011"),
    4: ("0000", "0001", "0100", "0110", "0011", "1101", "1010", "1011", "1110"),
    5: (
        "00000", "00001", "00100", "00110", "00011", "01101", "01010", "01011",
        "01110", "10101", "10111", "11000", "11001", "11100", "11110", "11011",
    ),
}


def _layer(d: int, weight: int) -> List[int]:
    """X_p: вершины веса p"""
    if not 0 <= weight <= d:
        return []
    values = []
    for ones in combinations(range(d), weight):
        values.append(sum(1 << (d - 1 - position) for position in ones))
    return sorted(values)


def hypercube_layer_set(d: int, weights: Iterable[int]) -> VertexSet:
    """Объединение слоев X_p по заданным весам"""
    if d < 1:
        raise InvalidDimensionError("d must be ≥ 1")
    return VertexSet.from_indices(1 << d, (v for p in set(weights) for v in _layer(d, p)))


def hypercube_middle_layers(d: int) -> VisibilityCertificate:
    """X_p ∪ X_{p+3}, p = floor(d/2)"""
    p = d // 2
    X = hypercube_layer_set(d, (p, p + 3))
    return emit_certificate(
        TopologySpec(kind=TopologyKind.HYPERCUBE, d=d),
        SetKind.MUTUAL,
        (to_bits(v, d) for v in X),
        constants.CONSTRUCTION_HC_MIDDLE_LAYERS,
    )


def hypercube_stored_optimum(d: int) -> VisibilityCertificate:
    """Максимальное множество взаимной видимости Q_d для 1 <= d <= 5"""
    if d < 1:
        raise InvalidDimensionError("d must be ≥ 1")
    if d not in STORED_HYPERCUBE_OPTIMA:
        raise UnsupportedError(f"no stored optimum for Q_{d}; known for d ≤ 5")
    return emit_certificate(
        TopologySpec(kind=TopologyKind.HYPERCUBE, d=d),
        SetKind.MUTUAL,
        STORED_HYPERCUBE_OPTIMA[d],
        constants.STORED_SOURCE,
    )
