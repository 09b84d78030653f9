"""
@file: ccc.py
@description: Множества взаимной видимости в CCC_d: уровень 0 и оптимум для CCC_3
@dependencies: base, core.labels
@created: 2026-10-18
"""

from ..core.config import constants
from ..core.errors import InvalidDimensionError
from ..core.labels import CCCLabel, to_bits
from ..schemas.certificate import SetKind, VisibilityCertificate
from ..schemas.topology import TopologyKind, TopologySpec
from .base import emit_certificate

CCC3_STORED_OPTIMUM = ("[0,100]", "[1,110]", "[1,000]", "[0,001]", "[1,111]", "[0,011]")


def ccc_level_zero_set(d: int) -> VisibilityCertificate:
    """
    Вершины [0,x] уровня 0: бит 0 равен нулю, позиции 1..ceil(d/2)-1 свободны,
    остальные нули. Размер 2^(ceil(d/2)-1).
    """
    if d < 3:
        raise InvalidDimensionError("d must be ≥ 3")
    free = (d + 1) // 2 - 1
    # свободные позиции 1..free идут сразу после бита 0
    shift = d - 1 - free
    labels = (str(CCCLabel(0, to_bits(value << shift, d))) for value in range(1 << free))
    return emit_certificate(
        TopologySpec(kind=TopologyKind.CCC, d=d),
        SetKind.MUTUAL,
        labels,
        constants.CONSTRUCTION_CCC_LEVEL0,
    )


def ccc3_stored_optimum() -> VisibilityCertificate:
    """Оптимальное множество CCC_3 из 6 вершин"""
    return emit_certificate(
        TopologySpec(kind=TopologyKind.CCC, d=3),
        SetKind.MUTUAL,
        CCC3_STORED_OPTIMUM,
        constants.STORED_SOURCE,
    )
