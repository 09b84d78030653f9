"""
@file: table.py
@description: CSV-таблица mu(Q_d) по d и строки оценок для остальных семейств
@dependencies: csv, formulas
@created: 2026-10-18
"""

import csv
import io
from typing import Iterable, List

from ..schemas.reports import BoundsReport
from ..schemas.topology import TopologyKind
from .formulas import hypercube_bounds

CSV_HEADER = ("d", "n", "mu", "lower_bound", "upper_bound")

# Общая строка таблицы для d >= 6
GENERAL_ROW = (">=6", "2^d", "<=2^(d-1)", "", "")


def vertex_count(report: BoundsReport) -> int:
    d = report.topology.d
    if report.topology.kind == TopologyKind.CCC:
        return d * 2 ** d
    if report.topology.kind == TopologyKind.BUTTERFLY:
        return (d + 1) * 2 ** d
    return 2 ** d


def report_row(report: BoundsReport) -> tuple:
    """Строка CSV: точное значение как =mu, иначе верхняя оценка как <=upper"""
    mu = f"={report.exact}" if report.exact is not None else f"<={report.upper_bound}"
    return (
        str(report.topology.d),
        str(vertex_count(report)),
        mu,
        str(report.lower_bound),
        str(report.upper_bound),
    )


def hypercube_table_rows(dimensions: Iterable[int] = range(1, 6), include_general: bool = True) -> List[tuple]:
    """Строки таблицы mu(Q_d) и, по желанию, общая строка для d >= 6"""
    rows = [report_row(hypercube_bounds(d)) for d in dimensions]
    if include_general:
        rows.append(GENERAL_ROW)
    return rows


def rows_to_csv(rows: Iterable[tuple]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerows(rows)
    return buffer.getvalue()
