"""
@file: base.py
@description: Сборка сертификата из меток и самопроверка в режиме отладки
@dependencies: core.visibility, schemas.certificate
@created: 2026-10-18
"""

from typing import Iterable

import structlog

from ..core.config import get_settings
from ..core.errors import VerificationError
from ..core.graph import Graph, VertexSet
from ..core.visibility import VisibilityResult, is_mutual_visibility_set, is_total_mutual_visibility_set
from ..schemas.certificate import SetKind, VerificationStatus, VisibilityCertificate
from ..schemas.topology import TopologySpec

logger = structlog.get_logger(__name__)


def certificate_vertex_set(graph: Graph, labels: Iterable[str]) -> VertexSet:
    """Метки сертификата -> множество индексов в graph"""
    from ..topologies.registry import parse_vertex

    return graph.vertex_set(parse_vertex(graph, text) for text in labels)


def check_set(graph: Graph, X: VertexSet, set_kind: SetKind) -> VisibilityResult:
    """Чекер, соответствующий виду множества"""
    if set_kind == SetKind.TOTAL:
        return is_total_mutual_visibility_set(graph, X)
    return is_mutual_visibility_set(graph, X)


def emit_certificate(
    topology: TopologySpec,
    set_kind: SetKind,
    labels: Iterable[str],
    source: str,
) -> VisibilityCertificate:
    """
    Создать сертификат. В режиме debug множество проверяется на
    сгенерированной топологии, невалидное не выпускается.
    """
    vertices = sorted(labels)
    certificate = VisibilityCertificate(
        topology=topology,
        set_kind=set_kind,
        vertices=vertices,
        claimed_size=len(vertices),
        source=source,
    )
    if not get_settings().debug:
        return certificate

    from ..topologies.registry import build_topology

    graph = build_topology(topology)
    result = check_set(graph, certificate_vertex_set(graph, vertices), set_kind)
    if not result:
        u, v = result.failing_pair
        logger.error(
            "construction failed self-verification",
            source=source,
            topology=str(topology),
            failing_pair=(str(graph.label(u)), str(graph.label(v))),
        )
        raise VerificationError(f"{source} on {topology} is not a {set_kind.value} visibility set")
    logger.debug("construction self-verified", source=source, topology=str(topology), size=len(vertices))
    return certificate.model_copy(update={"verified": VerificationStatus.VALID})
