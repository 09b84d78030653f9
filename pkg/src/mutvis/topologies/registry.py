"""
@file: registry.py
@description: Построение графа по TopologySpec и разбор меток вершин
@dependencies: hypercube, ccc, butterfly
@created: 2026-10-18
"""

from typing import Callable, Dict

from ..core.graph import Graph
from ..schemas.topology import TopologyKind, TopologySpec
from .butterfly import gen_butterfly
from .ccc import gen_ccc
from .hypercube import gen_hypercube

GENERATORS: Dict[TopologyKind, Callable[[int], Graph]] = {
    TopologyKind.HYPERCUBE: gen_hypercube,
    TopologyKind.CCC: gen_ccc,
    TopologyKind.BUTTERFLY: gen_butterfly,
}


def build_topology(spec: TopologySpec) -> Graph:
    """Сгенерировать граф семейства spec.kind размерности spec.d"""
    return GENERATORS[spec.kind](spec.d)


def parse_vertex(graph: Graph, text: str) -> int:
    """Разбор метки вершины в индекс; для семейств разбор строгий"""
    if graph.topology is not None:
        text = str(graph.topology.parse_label(text))
    return graph.index_of(text)
