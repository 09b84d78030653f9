"""
@file: formulas.py
@description: Замкнутые формулы оценок mu и mu_t для Q_d, CCC_d, BF(d) и гамминговых графов
@dependencies: math, fractions, schemas.reports
@created: 2026-10-18
"""

import math
from fractions import Fraction

from ..core.errors import InvalidArgumentError, InvalidDimensionError
from ..schemas.reports import BoundsReport
from ..schemas.topology import TopologyKind, TopologySpec

# Точные mu(Q_d), найденные исчерпывающим поиском
HYPERCUBE_EXACT = {1: 2, 2: 3, 3: 5, 4: 9, 5: 16}

# mu(BF(1)) = mu(C_4)
BF1_EXACT = 3

# Допуск сравнения с порогом Стирлинга
STIRLING_SLACK = 1e-9


def middle_layers_size(d: int) -> int:
    """C(d, floor(d/2)) + C(d, floor(d/2)+3)"""
    p = d // 2
    return math.comb(d, p) + math.comb(d, p + 3)


def stirling_threshold(d: int) -> float:
    """2^d / sqrt(pi d / 2)"""
    if d < 1:
        raise InvalidDimensionError("d must be ≥ 1")
    return 2 ** d / math.sqrt(math.pi * d / 2)


def exceeds_threshold(d: int) -> bool:
    """Нижняя оценка строго больше порога (с допуском)"""
    return middle_layers_size(d) > stirling_threshold(d) + STIRLING_SLACK


def hamming_total_lower(s: int, r: int) -> Fraction:
    """mu_t(K_s^r) >= s^(r-2) / (r(r+1))"""
    if s < 2 or r < 2:
        raise InvalidArgumentError("hamming bound needs s ≥ 2 and r ≥ 2")
    return Fraction(s ** (r - 2), r * (r + 1))


def hypercube_total_lower(d: int) -> Fraction:
    """Частный случай s = 2: mu_t(Q_d) >= 2^(d-2) / (d(d+1))"""
    return hamming_total_lower(2, d)


def hypercube_bounds(d: int) -> BoundsReport:
    if d < 1:
        raise InvalidDimensionError("d must be ≥ 1")
    lower = middle_layers_size(d)
    notes = []
    if d in HYPERCUBE_EXACT:
        exact = HYPERCUBE_EXACT[d]
        upper, upper_source = exact, "exhaustive search"
    else:
        exact = None
        upper, upper_source = 2 ** (d - 1), "half of the vertices (d ≥ 5)"
    threshold = stirling_threshold(d) if d >= 6 else None
    total_lower = None
    if d >= 2:
        total_lower = float(hypercube_total_lower(d))
        notes.append("mu_t lower bound is probabilistic, no certificate")
    return BoundsReport(
        topology=TopologySpec(kind=TopologyKind.HYPERCUBE, d=d),
        lower_bound=lower,
        lower_source="middle layers X_p ∪ X_(p+3)",
        upper_bound=upper,
        upper_source=upper_source,
        exact=exact,
        approx_ratio=upper / lower,
        total_lower=total_lower,
        threshold=threshold,
        notes=notes,
    )


def ccc_bounds(d: int) -> BoundsReport:
    if d < 3:
        raise InvalidDimensionError("d must be ≥ 3")
    lower = 2 ** ((d + 1) // 2 - 1)
    upper = 3 * 2 ** (d - 2)
    return BoundsReport(
        topology=TopologySpec(kind=TopologyKind.CCC, d=d),
        lower_bound=lower,
        lower_source="level-zero set",
        upper_bound=upper,
        upper_source="three vertices per subcube CCC_2",
        exact=6 if d == 3 else None,
        approx_ratio=float(3 * 2 ** (d // 2 - 1)),
        total_exact=0,
        notes=["bp(CCC_d) = 0, hence mu_t = 0"],
    )


def bf_exact(d: int) -> BoundsReport:
    if d < 1:
        raise InvalidDimensionError("d must be ≥ 1")
    mu = 2 ** (d + 1) - 2
    notes = []
    exact = mu
    if d == 1:
        # BF(1) совпадает с C_4
        exact = BF1_EXACT
        notes.append("BF(1) is the 4-cycle: mu = 3 exceeds the outer-level construction")
    return BoundsReport(
        topology=TopologySpec(kind=TopologyKind.BUTTERFLY, d=d),
        lower_bound=mu,
        lower_source="outer levels without the all-ones column",
        upper_bound=exact,
        upper_source="at most two vertices per column" if d >= 2 else "mu(C_4)",
        exact=exact,
        approx_ratio=exact / mu,
        total_exact=2 ** d,
        notes=notes,
    )


def ratio_constant(d_max: int = 64) -> float:
    """max по d = 6..d_max от (2^(d-1) / нижняя оценка) / sqrt(d)"""
    if d_max < 6:
        raise InvalidArgumentError("ratio constant is taken over d ≥ 6")
    return max(2 ** (d - 1) / middle_layers_size(d) / math.sqrt(d) for d in range(6, d_max + 1))


BOUNDS = {
    TopologyKind.HYPERCUBE: hypercube_bounds,
    TopologyKind.CCC: ccc_bounds,
    TopologyKind.BUTTERFLY: bf_exact,
}


def bounds_for(spec: TopologySpec) -> BoundsReport:
    """Оценки для семейства spec.kind"""
    return BOUNDS[spec.kind](spec.d)
