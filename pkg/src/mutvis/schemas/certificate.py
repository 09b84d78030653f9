"""
@file: certificate.py
@description: Сертификаты (тотальной) взаимной видимости: доменная модель и строгий файловый формат
@dependencies: pydantic, enum
@created: 2026-10-18
"""

import enum
from typing import List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..core.config import constants
from .graph import GraphDocument
from .topology import TopologySpec


class SetKind(str, enum.Enum):
    """Вид множества видимости"""
    MUTUAL = "mutual"
    TOTAL = "total"


class VerificationStatus(str, enum.Enum):
    """Результат проверки сертификата чекером"""
    UNVERIFIED = "unverified"
    VALID = "valid"
    INVALID = "invalid"


def _check_claimed_size(vertices: List[str], claimed_size: int) -> None:
    if claimed_size != len(vertices):
        raise ValueError(f"claimed_size={claimed_size} but {len(vertices)} vertices listed")
    if len(set(vertices)) != len(vertices):
        raise ValueError("vertices must be distinct")


class VisibilityCertificate(BaseModel):
    """Множество вершин сгенерированной топологии с заявленным свойством видимости"""
    topology: TopologySpec = Field(..., description="Семейство и размерность")
    set_kind: SetKind = Field(..., description="mutual или total")
    vertices: List[str] = Field(..., description="Метки вершин")
    claimed_size: int = Field(..., ge=0, description="Заявленная мощность")
    verified: VerificationStatus = Field(VerificationStatus.UNVERIFIED, description="Статус проверки")
    source: str = Field(..., min_length=1, description="Имя конструкции или stored-from-paper")

    model_config = ConfigDict(frozen=True, extra="forbid")

    @model_validator(mode="after")
    def validate_vertices(self) -> "VisibilityCertificate":
        """Размер совпадает со списком, все метки допустимы для топологии"""
        _check_claimed_size(self.vertices, self.claimed_size)
        for text in self.vertices:
            self.topology.parse_label(text)
        return self

    @property
    def size(self) -> int:
        return self.claimed_size


class GenericTopology(BaseModel):
    """Произвольный граф, встроенный в сертификат"""
    kind: Literal["generic"] = Field("generic", description="Маркер произвольного графа")
    graph: GraphDocument = Field(..., description="Встроенный граф")

    model_config = ConfigDict(extra="forbid")


class CertificateFile(BaseModel):
    """Версионированный JSON-документ сертификата; неизвестные поля отвергаются"""
    format: Literal["mutvis-cert/1"] = Field(constants.CERTIFICATE_FORMAT, description="Версия формата")
    topology: Union[TopologySpec, GenericTopology] = Field(..., description="Топология или встроенный граф")
    set_kind: SetKind = Field(..., description="mutual или total")
    vertices: List[str] = Field(..., description="Метки вершин")
    claimed_size: int = Field(..., ge=0, description="Заявленная мощность")
    source: str = Field(..., min_length=1, description="Происхождение множества")
    verified: VerificationStatus = Field(VerificationStatus.UNVERIFIED, description="Статус проверки")

    model_config = ConfigDict(extra="forbid")

    @model_validator(mode="after")
    def validate_vertices(self) -> "CertificateFile":
        """claimed_size совпадает с длиной списка"""
        _check_claimed_size(self.vertices, self.claimed_size)
        return self

    @property
    def topology_spec(self) -> Optional[TopologySpec]:
        return self.topology if isinstance(self.topology, TopologySpec) else None
