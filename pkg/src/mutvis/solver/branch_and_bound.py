"""
@file: branch_and_bound.py
@description: Точный поиск максимального множества (тотальной) взаимной видимости ветвями и границами
@dependencies: core.visibility, schemas.reports, structlog, concurrent.futures
@created: 2026-10-18
"""

import threading
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Sequence

import structlog

from ..core.config import get_settings
from ..core.errors import InvalidArgumentError, MutvisError, ResourceGuardError
from ..core.graph import Graph, VertexSet
from ..core.visibility import has_zero_total_mv, is_mutual_visibility_set, is_total_mutual_visibility_set
from ..schemas.certificate import SetKind
from ..schemas.reports import SolveOptions, SolveReport
from ..schemas.topology import TopologyKind

logger = structlog.get_logger(__name__)

# Семейства, для которых фиксация первой вершины корректна (вершинно-транзитивные)
SYMMETRIC_KINDS = (TopologyKind.HYPERCUBE, TopologyKind.CCC)


class _BudgetExhausted(Exception):
    pass


def branching_order(g: Graph) -> List[int]:
    """По убыванию степени, при равенстве по индексу"""
    return sorted(range(g.vertex_count), key=lambda v: (-g.degree(v), v))


def _column_groups(g: Graph, opts: SolveOptions) -> List[int]:
    """Маски групп для per_column_cap; группы обязаны не пересекаться"""
    if opts.per_column_cap is None:
        return []
    if opts.column_groups is not None:
        groups = [g.vertex_set(group).mask for group in opts.column_groups]
    elif g.topology is not None and g.topology.kind == TopologyKind.BUTTERFLY:
        from ..topologies.butterfly import bf_column_groups

        groups = [group.mask for group in bf_column_groups(g.topology.d)]
    else:
        raise InvalidArgumentError("per_column_cap needs column_groups for a non-butterfly graph")
    seen = 0
    for mask in groups:
        if seen & mask:
            raise InvalidArgumentError("column groups must be disjoint")
        seen |= mask
    return groups


class _Search:
    """Состояние поиска, общее для всех потоков"""

    def __init__(
        self,
        g: Graph,
        feasible: Callable[[int], bool],
        opts: SolveOptions,
        target: int,
    ):
        self.g = g
        self.feasible = feasible
        self.groups = _column_groups(g, opts)
        self.cap = opts.per_column_cap
        self.node_budget = opts.node_budget
        self.deadline = time.monotonic() + opts.time_budget if opts.time_budget else None
        # Ищем множества мощности >= target; best_size = target - 1 до первой находки
        self.best_size = target - 1
        self.best_mask: Optional[int] = None
        # лучшее найденное множество мощности < target
        self.fallback_mask: Optional[int] = None
        self.fallback_size = 0
        self.nodes = 0
        self.exhausted = False
        self._lock = threading.Lock()

    def bound(self, size: int, current: int, candidates: int) -> int:
        """|S| + число кандидатов с учетом ограничений по группам"""
        if not self.groups:
            return size + candidates.bit_count()
        total = size
        free = candidates
        for mask in self.groups:
            room = max(0, self.cap - (current & mask).bit_count())
            total += min(room, (candidates & mask).bit_count())
            free &= ~mask
        return total + free.bit_count()

    def _tick(self) -> None:
        with self._lock:
            self.nodes += 1
            if self.exhausted:
                raise _BudgetExhausted
            if self.node_budget is not None and self.nodes > self.node_budget:
                self.exhausted = True
            elif self.deadline is not None and time.monotonic() > self.deadline:
                self.exhausted = True
            if self.exhausted:
                raise _BudgetExhausted

    def _offer(self, current: int, size: int) -> None:
        with self._lock:
            if size > self.best_size:
                self.best_size = size
                self.best_mask = current
                logger.debug("incumbent improved", size=size)
            elif self.best_mask is None and size > self.fallback_size:
                self.fallback_size = size
                self.fallback_mask = current

    def filter_candidates(self, current: int, candidates: Sequence[int]) -> List[int]:
        """Кандидаты, каждый из которых по отдельности расширяет current"""
        return [v for v in candidates if self.feasible(current | (1 << v))]

    def run(self, current: int, size: int, candidates: List[int]) -> None:
        """Ветвление включить/исключить по кандидатам в фиксированном порядке"""
        self._tick()
        self._offer(current, size)
        while candidates:
            cand_mask = 0
            for v in candidates:
                cand_mask |= 1 << v
            if self.bound(size, current, cand_mask) <= self.best_size:
                return
            v, candidates = candidates[0], candidates[1:]
            extended = current | (1 << v)
            self.run(extended, size + 1, self.filter_candidates(extended, candidates))
            # ветка "исключить v" продолжается в цикле
            self._tick()

    def root_task(self, order: Sequence[int], i: int) -> None:
        """Поддерево множеств, у которых первая по порядку вершина order[i]"""
        v = order[i]
        if 1 + len(order) - i - 1 <= self.best_size:
            return
        current = 1 << v
        if not self.feasible(current):
            return
        try:
            self.run(current, 1, self.filter_candidates(current, order[i + 1:]))
        except _BudgetExhausted:
            pass


def make_checker(g: Graph, kind: SetKind) -> Callable[[int], bool]:
    check = is_total_mutual_visibility_set if kind == SetKind.TOTAL else is_mutual_visibility_set
    n = g.vertex_count
    return lambda mask: check(g, VertexSet(n, mask)).visible


def _search(g: Graph, opts: SolveOptions, kind: SetKind, target: int) -> _Search:
    order = branching_order(g)
    roots = list(range(len(order)))
    if opts.symmetry:
        spec = g.topology
        if spec is None or spec.kind not in SYMMETRIC_KINDS:
            raise MutvisError("symmetry breaking is only valid for hypercube and ccc topologies")
        order.remove(0)
        order.insert(0, 0)
        roots = [0]

    search = _Search(g, make_checker(g, kind), opts, target)
    workers = opts.workers or get_settings().threads
    if workers <= 1 or len(roots) <= 1:
        for i in roots:
            if search.exhausted:
                break
            search.root_task(order, i)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(lambda i: search.root_task(order, i), roots))
    return search


def _solve(g: Graph, opts: Optional[SolveOptions], kind: SetKind) -> SolveReport:
    settings = get_settings()
    opts = opts or SolveOptions(
        kind=kind,
        node_budget=settings.default_node_budget,
        time_budget=settings.default_time_budget,
    )
    n = g.vertex_count
    if n > settings.solver_max_vertices:
        raise ResourceGuardError(f"{n} vertices exceed the solver guard {settings.solver_max_vertices}")

    started = time.monotonic()
    log = logger.bind(kind=kind.value, vertices=n, topology=str(g.topology) if g.topology else "generic")
    log.info("solver started", symmetry=opts.symmetry, seed=opts.initial_lower_bound)

    if kind == SetKind.TOTAL and n >= 2 and has_zero_total_mv(g):
        log.info("no bypass vertices, total optimum is zero")
        return build_report(g, kind, 0, True, 0, started)

    target = max(opts.initial_lower_bound or 0, 1)
    search = _search(g, opts, kind, target)
    mask = search.best_mask
    nodes = search.nodes
    exhausted = search.exhausted
    if mask is None and target > 1:
        mask = search.fallback_mask
        rest = None if exhausted else _remaining_budget(opts, nodes, started)
        if rest is None:
            exhausted = True
            log.warning("budget exhausted before reaching the seed", seed=target)
        else:
            log.warning("seed exceeds the optimum, searching again without it", seed=target)
            rerun = _search(g, rest, kind, (mask or 0).bit_count() + 1)
            nodes += rerun.nodes
            exhausted = rerun.exhausted
            if rerun.best_mask is not None:
                mask = rerun.best_mask

    mask = mask or 0
    proven = not exhausted
    if exhausted:
        log.warning("search budget exhausted", nodes=nodes, best=mask.bit_count())
    log.info("solver finished", optimum=mask.bit_count(), nodes=nodes, proven=proven)
    return build_report(g, kind, mask, proven, nodes, started)


def _remaining_budget(opts: SolveOptions, nodes: int, started: float) -> Optional[SolveOptions]:
    """Опции второго прохода без затравки с остатком бюджетов; None, если бюджет исчерпан"""
    update = {"initial_lower_bound": None}
    if opts.node_budget is not None:
        if nodes >= opts.node_budget:
            return None
        update["node_budget"] = opts.node_budget - nodes
    if opts.time_budget is not None:
        left = opts.time_budget - (time.monotonic() - started)
        if left <= 0:
            return None
        update["time_budget"] = left
    return opts.model_copy(update=update)


def build_report(g: Graph, kind: SetKind, mask: int, proven: bool, nodes: int, started: float) -> SolveReport:
    witness = VertexSet(g.vertex_count, mask)
    return SolveReport(
        kind=kind,
        optimum=len(witness),
        witness=witness,
        proven_optimal=proven,
        nodes_explored=nodes,
        elapsed=time.monotonic() - started,
        witness_labels=[str(g.label(v)) for v in witness],
    )


def max_mv_set(g: Graph, opts: Optional[SolveOptions] = None) -> SolveReport:
    """mu(G): максимальное множество взаимной видимости"""
    return _solve(g, opts, SetKind.MUTUAL)


def max_total_mv_set(g: Graph, opts: Optional[SolveOptions] = None) -> SolveReport:
    """mu_t(G): максимальное множество тотальной взаимной видимости"""
    return _solve(g, opts, SetKind.TOTAL)


def solve(g: Graph, opts: SolveOptions) -> SolveReport:
    """Выбор задачи по opts.kind"""
    if opts.kind == SetKind.TOTAL:
        return max_total_mv_set(g, opts)
    return max_mv_set(g, opts)

