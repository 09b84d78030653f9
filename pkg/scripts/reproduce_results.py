"""
@file: reproduce_results.py
@description: Воспроизведение известных значений: конструкции, точный поиск на малых графах, таблица оценок Q_d
@dependencies: mutvis, structlog
@created: 2026-10-18
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src"))

import structlog

from mutvis.bounds import bounds_for, rows_to_csv, hypercube_table_rows
from mutvis.core.logging_config import configure_logging
from mutvis.core.services import certificate_service
from mutvis.schemas import SetKind, SolveOptions, TopologyKind, TopologySpec
from mutvis.solver import solve
from mutvis.topologies import build_topology

logger = structlog.get_logger()

# (конструкция, d, ожидаемая мощность)
CONSTRUCTION_CHECKS = [
    ("hc-stored", 3, 5),
    ("hc-stored", 4, 9),
    ("hc-stored", 5, 16),
    ("hc-middle-layers", 6, 21),
    ("ccc-level0", 5, 4),
    ("ccc3-stored", 3, 6),
    ("bf-mv", 3, 14),
    ("bf-mv", 4, 30),
    ("bf-total", 4, 16),
]

# Бюджет времени для Q_5 с затравкой 17, секунды
Q5_TIME_BUDGET = 120.0

# (семейство, d, тип множества, ожидаемый оптимум)
SOLVER_CHECKS = [
    (TopologyKind.HYPERCUBE, 3, SetKind.MUTUAL, 5),
    (TopologyKind.CCC, 3, SetKind.TOTAL, 0),
    (TopologyKind.BUTTERFLY, 2, SetKind.MUTUAL, 6),
    (TopologyKind.BUTTERFLY, 2, SetKind.TOTAL, 4),
]


def check_constructions() -> int:
    """Построить и проверить чекером каждую конструкцию"""
    failures = 0
    for name, d, expected in CONSTRUCTION_CHECKS:
        certificate, outcome = certificate_service.verify(certificate_service.build(name, d))
        ok = outcome.valid and certificate.claimed_size == expected
        failures += not ok
        print(f"construct {name:<18} d={d}  size={certificate.claimed_size:<4} expected={expected:<4} {'ok' if ok else 'FAIL'}")
    return failures


def check_solver() -> int:
    """Точный поиск на малых графах"""
    failures = 0
    for kind, d, set_kind, expected in SOLVER_CHECKS:
        graph = build_topology(TopologySpec(kind=kind, d=d))
        report = solve(graph, SolveOptions(kind=set_kind))
        ok = report.proven_optimal and report.optimum == expected
        failures += not ok
        print(f"solve {kind.value}({d}) {set_kind.value:<6}  optimum={report.optimum:<3} expected={expected:<3} {'ok' if ok else 'FAIL'}")
    return failures


def check_q5_seed(time_budget: float = Q5_TIME_BUDGET) -> int:
    """Q_5: поиск множества из 17 вершин с нарушением симметрии; исчерпание бюджета не доказательство"""
    graph = build_topology(TopologySpec(kind=TopologyKind.HYPERCUBE, d=5))
    options = SolveOptions(initial_lower_bound=17, symmetry=True, time_budget=time_budget)
    report = solve(graph, options)
    ok = report.optimum <= 16
    verdict = "no 17-set, proven" if report.proven_optimal else "budget exhausted, not a proof"
    print(f"solve hypercube(5) seed=17  best={report.optimum:<3} nodes={report.nodes_explored}  {verdict} {'ok' if ok else 'FAIL'}")
    return int(not ok)


def print_bounds() -> None:
    """Таблица оценок Q_d и коэффициенты приближения"""
    print(rows_to_csv(hypercube_table_rows()), end="")
    for kind, d in [(TopologyKind.HYPERCUBE, 10), (TopologyKind.CCC, 8), (TopologyKind.BUTTERFLY, 6)]:
        report = bounds_for(TopologySpec(kind=kind, d=d))
        print(f"{kind.value}({d}): {report.lower_bound}..{report.upper_bound} ratio={report.approx_ratio:.3f}")


def main() -> int:
    configure_logging("WARNING")
    failures = check_constructions() + check_solver() + check_q5_seed()
    print_bounds()
    logger.info("reproduction finished", failures=failures)
    print("all checks passed" if failures == 0 else f"{failures} checks failed")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
