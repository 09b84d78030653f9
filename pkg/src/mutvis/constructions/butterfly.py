"""
@file: butterfly.py
@description: Множества (тотальной) взаимной видимости в BF(d) на крайних уровнях
@dependencies: base, core.labels
@created: 2026-10-18
"""

from typing import List

from ..core.config import constants
from ..core.errors import InvalidDimensionError
from ..core.labels import BFLabel, to_bits
from ..schemas.certificate import SetKind, VisibilityCertificate
from ..schemas.topology import TopologyKind, TopologySpec
from .base import emit_certificate


def _check(d: int) -> None:
    if d < 1:
        raise InvalidDimensionError("d must be ≥ 1")


def _outer_levels(d: int, columns: List[int]) -> List[str]:
    return [str(BFLabel(level, to_bits(c, d))) for level in (0, d) for c in columns]


def total_columns(d: int) -> List[int]:
    """Столбцы i множества L': i нечетно и i <= 2^(d-1), либо i четно и i >= 2^(d-1)"""
    _check(d)
    half = 1 << (d - 1)
    return [i for i in range(1 << d) if (i % 2 == 1 and i <= half) or (i % 2 == 0 and i >= half)]


def bf_mv_set(d: int) -> VisibilityCertificate:
    """(L_0 ∪ L_d) без вершин столбца из одних единиц, размер 2^(d+1)-2"""
    _check(d)
    ones = (1 << d) - 1
    return emit_certificate(
        TopologySpec(kind=TopologyKind.BUTTERFLY, d=d),
        SetKind.MUTUAL,
        _outer_levels(d, list(range(ones))),
        constants.CONSTRUCTION_BF_MV,
    )


def bf_total_mv_set(d: int) -> VisibilityCertificate:
    """L'_0 ∪ L'_d, размер 2^d"""
    return emit_certificate(
        TopologySpec(kind=TopologyKind.BUTTERFLY, d=d),
        SetKind.TOTAL,
        _outer_levels(d, total_columns(d)),
        constants.CONSTRUCTION_BF_TOTAL,
    )
