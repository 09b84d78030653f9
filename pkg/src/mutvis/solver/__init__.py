"""
@file: __init__.py
@description: Точные солверы mu(G) и mu_t(G)
"""

from .branch_and_bound import branching_order, max_mv_set, max_total_mv_set, solve
from .brute_force import brute_force_mv

__all__ = [
    "branching_order",
    "max_mv_set",
    "max_total_mv_set",
    "solve",
    "brute_force_mv",
]
