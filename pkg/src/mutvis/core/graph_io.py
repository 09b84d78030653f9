"""
@file: graph_io.py
@description: Чтение и запись графа в JSON (GraphDocument) и экспорт в DOT
@dependencies: pydantic, schemas.graph, topologies
@created: 2026-10-18
"""

import json
from pathlib import Path
from typing import Union

from pydantic import ValidationError

from ..schemas.graph import GraphDocument
from .errors import GraphValidationError
from .graph import Graph
from .labels import PlainLabel


def graph_to_document(g: Graph) -> GraphDocument:
    """Граф -> GraphDocument; метки записываются строками"""
    return GraphDocument(
        n=g.vertex_count,
        edges=list(g.edges()),
        labels=[str(g.label(v)) for v in range(g.vertex_count)],
        topology=g.topology,
    )


def graph_from_document(doc: GraphDocument) -> Graph:
    """
    GraphDocument -> Graph. Для документа с topology граф пересобирается
    генератором и сверяется по множеству ребер.
    """
    if doc.topology is not None:
        from ..topologies.registry import build_topology

        g = build_topology(doc.topology)
        if g.vertex_count != doc.n or set(g.edges()) != {tuple(sorted(e)) for e in doc.edges}:
            raise GraphValidationError(f"edges do not match the generated {doc.topology}")
        return g
    labels = [PlainLabel(name) for name in doc.labels] if doc.labels is not None else None
    return Graph.from_edges(doc.n, doc.edges, labels)


def dump_graph_json(g: Graph) -> str:
    return graph_to_document(g).model_dump_json(exclude_none=True)


def load_graph_json(text: str) -> Graph:
    """Разобрать JSON графа; ошибки схемы -> GraphValidationError"""
    try:
        doc = GraphDocument.model_validate_json(text)
    except ValidationError as e:
        raise GraphValidationError(f"malformed graph document: {e.error_count()} error(s): {e.errors()[0]['msg']}") from e
    return graph_from_document(doc)


def read_graph(path: Union[str, Path]) -> Graph:
    return load_graph_json(Path(path).read_text(encoding="utf-8"))


def write_graph(g: Graph, path: Union[str, Path]) -> None:
    Path(path).write_text(dump_graph_json(g) + "\n", encoding="utf-8")


def graph_to_dot(g: Graph, name: str = "G") -> str:
    """Неориентированный DOT, имена узлов - строки меток"""
    lines = [f"graph {json.dumps(name)} {{"]
    for v in range(g.vertex_count):
        lines.append(f"  {json.dumps(str(g.label(v)))};")
    for u, v in g.edges():
        lines.append(f"  {json.dumps(str(g.label(u)))} -- {json.dumps(str(g.label(v)))};")
    lines.append("}")
    return "\n".join(lines) + "\n"
