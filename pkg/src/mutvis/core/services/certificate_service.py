"""
@file: certificate_service.py
@description: Сервис сертификатов: построение, проверка, чтение и запись файлов mutvis-cert/1
@dependencies: pydantic, structlog, constructions, schemas.certificate
@created: 2026-10-18
"""

from pathlib import Path
from typing import Tuple, Union

import structlog
from pydantic import ValidationError

from ...constructions import build_construction, certificate_vertex_set, check_set
from ...schemas.certificate import (
    CertificateFile,
    GenericTopology,
    VerificationStatus,
    VisibilityCertificate,
)
from ...schemas.reports import VerifyOutcome
from ...topologies.registry import build_topology
from ..errors import CertificateFormatError
from ..graph import Graph, VertexSet
from ..graph_io import graph_from_document

logger = structlog.get_logger(__name__)


class CertificateService:
    """Сервис для работы с сертификатами видимости"""

    def build(self, name: str, d: int, verify: bool = False) -> VisibilityCertificate:
        """
        Построить сертификат конструкции.

        Args:
            name: Имя конструкции из реестра
            d: Размерность
            verify: Сразу прогнать чекер и записать статус

        Returns:
            VisibilityCertificate: Сертификат
        """
        certificate = build_construction(name, d)
        logger.info("certificate built", construction=name, d=d, size=certificate.claimed_size)
        if verify:
            certificate, _ = self.verify(certificate)
        return certificate

    def verify(self, certificate: VisibilityCertificate) -> Tuple[VisibilityCertificate, VerifyOutcome]:
        """Проверить сертификат на пересобранной топологии"""
        graph = build_topology(certificate.topology)
        X = certificate_vertex_set(graph, certificate.vertices)
        outcome = self._check(graph, X, certificate.set_kind)
        return certificate.model_copy(update={"verified": self._status(outcome)}), outcome

    def to_file(self, certificate: VisibilityCertificate) -> CertificateFile:
        """Доменный сертификат -> файловый документ"""
        return CertificateFile(
            topology=certificate.topology,
            set_kind=certificate.set_kind,
            vertices=list(certificate.vertices),
            claimed_size=certificate.claimed_size,
            source=certificate.source,
            verified=certificate.verified,
        )

    def resolve(self, document: CertificateFile) -> Tuple[Graph, VertexSet]:
        """Граф сертификата и множество его вершин"""
        if isinstance(document.topology, GenericTopology):
            graph = graph_from_document(document.topology.graph)
        else:
            graph = build_topology(document.topology)
        return graph, certificate_vertex_set(graph, document.vertices)

    def verify_file(self, document: CertificateFile) -> Tuple[CertificateFile, VerifyOutcome]:
        """Проверить документ; возвращает копию с обновленным полем verified"""
        graph, X = self.resolve(document)
        outcome = self._check(graph, X, document.set_kind)
        logger.info(
            "certificate verified",
            source=document.source,
            set_kind=document.set_kind.value,
            size=len(X),
            valid=outcome.valid,
        )
        return document.model_copy(update={"verified": self._status(outcome)}), outcome

    def loads(self, text: str) -> CertificateFile:
        """Строгий разбор JSON сертификата"""
        try:
            return CertificateFile.model_validate_json(text)
        except ValidationError as e:
            first = e.errors()[0]
            location = ".".join(str(part) for part in first["loc"]) or "<root>"
            raise CertificateFormatError(f"invalid certificate at {location}: {first['msg']}") from e

    def dumps(self, document: CertificateFile) -> str:
        return document.model_dump_json()

    def read(self, path: Union[str, Path]) -> CertificateFile:
        return self.loads(Path(path).read_text(encoding="utf-8"))

    def write(self, document: CertificateFile, path: Union[str, Path]) -> None:
        Path(path).write_text(self.dumps(document) + "\n", encoding="utf-8")

    def _check(self, graph: Graph, X: VertexSet, set_kind) -> VerifyOutcome:
        result = check_set(graph, X, set_kind)
        failing = None
        if result.failing_pair is not None:
            u, v = result.failing_pair
            failing = (str(graph.label(u)), str(graph.label(v)))
        return VerifyOutcome(valid=result.visible, set_kind=set_kind, size=len(X), failing_pair=failing)

    @staticmethod
    def _status(outcome: VerifyOutcome) -> VerificationStatus:
        return VerificationStatus.VALID if outcome.valid else VerificationStatus.INVALID


# Создаем экземпляр сервиса
certificate_service = CertificateService()
