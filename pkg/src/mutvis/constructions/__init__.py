"""
@file: __init__.py
@description: Явные конструкции множеств (тотальной) взаимной видимости и сохраненные оптимумы
"""

from .base import certificate_vertex_set, check_set, emit_certificate
from .butterfly import bf_mv_set, bf_total_mv_set, total_columns
from .ccc import ccc3_stored_optimum, ccc_level_zero_set
from .hypercube import hypercube_layer_set, hypercube_middle_layers, hypercube_stored_optimum
from .registry import CONSTRUCTIONS, build_construction

__all__ = [
    "certificate_vertex_set",
    "check_set",
    "emit_certificate",
    "bf_mv_set",
    "bf_total_mv_set",
    "total_columns",
    "ccc3_stored_optimum",
    "ccc_level_zero_set",
    "hypercube_layer_set",
    "hypercube_middle_layers",
    "hypercube_stored_optimum",
    "CONSTRUCTIONS",
    "build_construction",
]
