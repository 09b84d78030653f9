"""
@file: __init__.py
@description: Генераторы Q_d, CCC_d, BF(d) и оракулы естественной маршрутизации
"""

from .butterfly import (
    RouteDirection,
    bf_column,
    bf_column_groups,
    bf_index,
    bf_level,
    bf_level_span,
    bf_natural_route,
    bf_sub_butterflies,
    gen_butterfly,
)
from .ccc import ccc_index, ccc_natural_distance, ccc_subcube_supervertices, cycle_cover_walk, gen_ccc
from .hypercube import gen_hypercube, hypercube_subcube
from .registry import build_topology, parse_vertex

__all__ = [
    "RouteDirection",
    "bf_column",
    "bf_column_groups",
    "bf_index",
    "bf_level",
    "bf_level_span",
    "bf_natural_route",
    "bf_sub_butterflies",
    "gen_butterfly",
    "ccc_index",
    "ccc_natural_distance",
    "ccc_subcube_supervertices",
    "cycle_cover_walk",
    "gen_ccc",
    "gen_hypercube",
    "hypercube_subcube",
    "build_topology",
    "parse_vertex",
]
