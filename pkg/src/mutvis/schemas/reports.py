"""
@file: reports.py
@description: Pydantic схемы параметров солвера и отчетов (солвер, оценки, bypass, проверка)
@dependencies: pydantic
@created: 2026-10-18
"""

from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_serializer, model_validator

from ..core.graph import VertexSet
from .certificate import SetKind
from .topology import TopologySpec


class SolveOptions(BaseModel):
    """Параметры точного поиска"""
    kind: SetKind = Field(SetKind.MUTUAL, description="mutual или total")
    node_budget: Optional[int] = Field(None, gt=0, description="Лимит узлов поиска")
    time_budget: Optional[float] = Field(None, gt=0, description="Лимит времени, секунды")
    initial_lower_bound: Optional[int] = Field(None, ge=0, description="Известная нижняя оценка (затравка)")
    per_column_cap: Optional[int] = Field(None, ge=0, description="Не больше cap вершин в каждой группе")
    column_groups: Optional[List[List[int]]] = Field(
        None, description="Группы вершин для per_column_cap; для бабочки по умолчанию столбцы"
    )
    symmetry: bool = Field(False, description="Фиксировать первую вершину (только Q_d и CCC_d)")
    workers: Optional[int] = Field(None, ge=1, description="Число потоков; по умолчанию MUTVIS_THREADS")

    model_config = ConfigDict(frozen=True, extra="forbid")


class SolveReport(BaseModel):
    """Результат поиска: оптимум (или лучшее найденное) и свидетель"""
    kind: SetKind = Field(..., description="mutual или total")
    optimum: int = Field(..., ge=0, description="Мощность лучшего найденного множества")
    witness: VertexSet = Field(..., description="Множество-свидетель")
    proven_optimal: bool = Field(..., description="Поиск завершен без исчерпания бюджета")
    nodes_explored: int = Field(..., ge=0, description="Число узлов дерева поиска")
    elapsed: float = Field(..., ge=0, description="Время, секунды")
    witness_labels: Optional[List[str]] = Field(None, description="Метки вершин свидетеля")

    model_config = ConfigDict(arbitrary_types_allowed=True)

    @model_validator(mode="after")
    def validate_optimum(self) -> "SolveReport":
        """optimum = |witness|"""
        if self.optimum != len(self.witness):
            raise ValueError(f"optimum={self.optimum} but witness has {len(self.witness)} vertices")
        return self

    @field_serializer("witness")
    def serialize_witness(self, witness: VertexSet) -> List[int]:
        return witness.to_list()


class BoundsReport(BaseModel):
    """Нижняя и верхняя оценки mu (и mu_t, если известно) для семейства"""
    topology: TopologySpec = Field(..., description="Семейство и размерность")
    lower_bound: int = Field(..., ge=0, description="Нижняя оценка mu")
    lower_source: str = Field(..., description="Откуда нижняя оценка")
    upper_bound: int = Field(..., ge=0, description="Верхняя оценка mu")
    upper_source: str = Field(..., description="Откуда верхняя оценка")
    exact: Optional[int] = Field(None, ge=0, description="Точное значение mu")
    approx_ratio: float = Field(..., ge=1, description="upper / lower")
    total_exact: Optional[int] = Field(None, ge=0, description="Точное значение mu_t")
    total_lower: Optional[float] = Field(None, ge=0, description="Нижняя оценка mu_t")
    threshold: Optional[float] = Field(None, description="Порог 2^d / sqrt(pi d / 2)")
    notes: List[str] = Field(default_factory=list, description="Пояснения")

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def validate_order(self) -> "BoundsReport":
        """lower <= exact <= upper"""
        if self.lower_bound > self.upper_bound:
            raise ValueError("lower_bound exceeds upper_bound")
        if self.exact is not None and not self.lower_bound <= self.exact <= self.upper_bound:
            raise ValueError("exact lies outside [lower_bound, upper_bound]")
        return self


class BypassSummary(BaseModel):
    """bp(G) и вердикт mu_t(G) = 0"""
    topology: Optional[str] = Field(None, description="Семейство графа, если известно")
    vertex_count: int = Field(..., ge=0, description="Число вершин")
    bp: int = Field(..., ge=0, description="Число bypass-вершин")
    bypass_vertices: List[str] = Field(default_factory=list, description="Метки bypass-вершин")
    total_mv_zero: bool = Field(..., description="mu_t(G) = 0")


class VerifyOutcome(BaseModel):
    """Вердикт проверки сертификата"""
    valid: bool = Field(..., description="Множество обладает заявленным свойством")
    set_kind: SetKind = Field(..., description="mutual или total")
    size: int = Field(..., ge=0, description="Мощность множества")
    failing_pair: Optional[Tuple[str, str]] = Field(None, description="Первая невидимая пара")
