"""
@file: brute_force.py
@description: Полный перебор подмножеств - независимый оракул для тестов солвера
@dependencies: core.visibility
@created: 2026-10-18
"""

import time
from itertools import combinations

from ..core.config import get_settings
from ..core.errors import ResourceGuardError
from ..core.graph import Graph
from ..schemas.certificate import SetKind
from ..schemas.reports import SolveReport
from .branch_and_bound import make_checker, build_report


def brute_force_mv(g: Graph, kind: SetKind = SetKind.MUTUAL) -> SolveReport:
    """
    Перебор подмножеств по убыванию мощности; первое прошедшее чекер -
    максимум (лексикографически первое среди равных).
    """
    n = g.vertex_count
    limit = get_settings().brute_force_max_vertices
    if n > limit:
        raise ResourceGuardError(f"brute force refuses {n} vertices (limit {limit})")
    started = time.monotonic()
    feasible = make_checker(g, kind)
    checked = 0
    for size in range(n, 0, -1):
        for subset in combinations(range(n), size):
            checked += 1
            mask = sum(1 << v for v in subset)
            if feasible(mask):
                return build_report(g, kind, mask, True, checked, started)
    return build_report(g, kind, 0, True, checked, started)
