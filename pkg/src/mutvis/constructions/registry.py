"""
@file: registry.py
@description: Реестр конструкций: имя -> построитель сертификата по d
@dependencies: hypercube, ccc, butterfly
@created: 2026-10-18
"""

from typing import Callable, Dict

from ..core.config import constants
from ..core.errors import InvalidArgumentError, UnsupportedError
from ..schemas.certificate import VisibilityCertificate
from .butterfly import bf_mv_set, bf_total_mv_set
from .ccc import ccc3_stored_optimum, ccc_level_zero_set
from .hypercube import hypercube_middle_layers, hypercube_stored_optimum


def _ccc3_stored(d: int) -> VisibilityCertificate:
    if d != 3:
        raise UnsupportedError("ccc3-stored exists only for d = 3")
    return ccc3_stored_optimum()


CONSTRUCTIONS: Dict[str, Callable[[int], VisibilityCertificate]] = {
    constants.CONSTRUCTION_HC_MIDDLE_LAYERS: hypercube_middle_layers,
    constants.CONSTRUCTION_HC_STORED: hypercube_stored_optimum,
    constants.CONSTRUCTION_CCC_LEVEL0: ccc_level_zero_set,
    constants.CONSTRUCTION_CCC3_STORED: _ccc3_stored,
    constants.CONSTRUCTION_BF_MV: bf_mv_set,
    constants.CONSTRUCTION_BF_TOTAL: bf_total_mv_set,
}


def build_construction(name: str, d: int) -> VisibilityCertificate:
    """Построить сертификат конструкции name для размерности d"""
    if name not in CONSTRUCTIONS:
        known = ", ".join(sorted(CONSTRUCTIONS))
        raise InvalidArgumentError(f"unknown construction {name!r}; known: {known}")
    return CONSTRUCTIONS[name](d)
