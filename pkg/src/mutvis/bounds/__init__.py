"""
@file: __init__.py
@description: Оценки mu и mu_t и таблица значений
"""

from .formulas import (
    HYPERCUBE_EXACT,
    bf_exact,
    bounds_for,
    ccc_bounds,
    exceeds_threshold,
    hamming_total_lower,
    hypercube_bounds,
    hypercube_total_lower,
    middle_layers_size,
    ratio_constant,
    stirling_threshold,
)
from .table import report_row, rows_to_csv, hypercube_table_rows

__all__ = [
    "HYPERCUBE_EXACT",
    "bf_exact",
    "bounds_for",
    "ccc_bounds",
    "exceeds_threshold",
    "hamming_total_lower",
    "hypercube_bounds",
    "hypercube_total_lower",
    "middle_layers_size",
    "ratio_constant",
    "stirling_threshold",
    "report_row",
    "rows_to_csv",
    "hypercube_table_rows",
]
