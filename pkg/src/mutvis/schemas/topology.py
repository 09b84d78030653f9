"""
@file: topology.py
@description: Pydantic схема описания топологии (семейство + размерность)
@dependencies: pydantic, enum
@created: 2026-10-18
"""

import enum

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..core.labels import VertexLabel, parse_bf_label, parse_ccc_label, parse_hypercube_label


class TopologyKind(str, enum.Enum):
    """Семейства графов"""
    HYPERCUBE = "hypercube"
    CCC = "ccc"
    BUTTERFLY = "butterfly"


# Минимальная размерность для каждого семейства
MIN_DIMENSION = {
    TopologyKind.HYPERCUBE: 1,
    TopologyKind.CCC: 3,
    TopologyKind.BUTTERFLY: 1,
}


class TopologySpec(BaseModel):
    """Семейство и размерность d"""
    kind: TopologyKind = Field(..., description="Семейство графа")
    d: int = Field(..., ge=1, description="Размерность")

    model_config = ConfigDict(frozen=True, extra="forbid")

    @model_validator(mode="after")
    def validate_dimension(self) -> "TopologySpec":
        """Проверяет минимальную размерность семейства"""
        minimum = MIN_DIMENSION[self.kind]
        if self.d < minimum:
            raise ValueError(f"d must be ≥ {minimum} for {self.kind.value}")
        return self

    def parse_label(self, text: str) -> VertexLabel:
        """Строгий разбор метки вершины этого семейства"""
        return _LABEL_PARSERS[self.kind](text, self.d)

    def __str__(self) -> str:
        return f"{self.kind.value}({self.d})"


_LABEL_PARSERS = {
    TopologyKind.HYPERCUBE: parse_hypercube_label,
    TopologyKind.CCC: parse_ccc_label,
    TopologyKind.BUTTERFLY: parse_bf_label,
}
