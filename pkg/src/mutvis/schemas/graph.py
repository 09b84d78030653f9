"""
@file: graph.py
@description: Pydantic схема файла графа {"n", "edges", "labels"}
@dependencies: pydantic
@created: 2026-10-18
"""

from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .topology import TopologySpec


class GraphDocument(BaseModel):
    """Граф в JSON: число вершин, ребра по индексам, необязательные метки"""
    n: int = Field(..., ge=0, description="Число вершин")
    edges: List[Tuple[int, int]] = Field(default_factory=list, description="Ребра (u, v) по индексам")
    labels: Optional[List[str]] = Field(None, description="Метки вершин по индексам")
    topology: Optional[TopologySpec] = Field(None, description="Семейство, если граф сгенерирован")

    model_config = ConfigDict(extra="forbid")

    @model_validator(mode="after")
    def validate_labels(self) -> "GraphDocument":
        """Число меток совпадает с n, метки уникальны"""
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise ValueError(f"labels has {len(self.labels)} entries, expected {self.n}")
            if len(set(self.labels)) != self.n:
                raise ValueError("labels must be unique")
        return self
