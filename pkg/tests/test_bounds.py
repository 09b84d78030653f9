"""
Тесты замкнутых оценок и таблицы mu(Q_d)
"""

import math
from fractions import Fraction

import pytest
from pydantic import ValidationError

from mutvis.bounds import (
    bf_exact,
    ccc_bounds,
    exceeds_threshold,
    hamming_total_lower,
    hypercube_bounds,
    hypercube_total_lower,
    middle_layers_size,
    ratio_constant,
    rows_to_csv,
    stirling_threshold,
    hypercube_table_rows,
)
from mutvis.constructions import bf_mv_set, ccc_level_zero_set, hypercube_middle_layers
from mutvis.core.errors import InvalidArgumentError, InvalidDimensionError
from mutvis.schemas import BoundsReport, TopologySpec


class TestHypercubeBounds:

    @pytest.mark.parametrize("d,exact", [(1, 2), (2, 3), (3, 5), (4, 9), (5, 16)])
    def test_exact_values(self, d, exact):
        report = hypercube_bounds(d)
        assert report.exact == exact
        assert report.lower_bound <= exact <= report.upper_bound

    def test_d6(self):
        report = hypercube_bounds(6)
        assert report.lower_bound == 21
        assert report.upper_bound == 32
        assert report.exact is None
        assert report.threshold == pytest.approx(64 / math.sqrt(3 * math.pi))
        assert report.approx_ratio == pytest.approx(32 / 21)

    def test_total_lower_reported(self):
        assert hypercube_bounds(4).total_lower == pytest.approx(0.2)
        assert hypercube_bounds(1).total_lower is None

    def test_invalid_dimension(self):
        with pytest.raises(InvalidDimensionError):
            hypercube_bounds(0)

    @pytest.mark.parametrize("d", range(6, 65))
    def test_lower_bound_beats_threshold(self, d):
        assert exceeds_threshold(d)
        assert middle_layers_size(d) > stirling_threshold(d)

    def test_ratio_is_order_sqrt_d(self):
        c = ratio_constant(64)
        assert c < 1
        for d in range(6, 65):
            assert hypercube_bounds(d).approx_ratio <= c * math.sqrt(d) + 1e-12

    def test_ratio_constant_range(self):
        with pytest.raises(InvalidArgumentError):
            ratio_constant(5)

    @pytest.mark.parametrize("d", range(1, 11))
    def test_construction_meets_lower_bound(self, d):
        assert hypercube_middle_layers(d).claimed_size == hypercube_bounds(d).lower_bound


class TestCCCBounds:

    def test_d3(self):
        report = ccc_bounds(3)
        assert report.upper_bound == 6
        assert report.exact == 6
        assert report.total_exact == 0

    def test_d4(self):
        report = ccc_bounds(4)
        assert (report.lower_bound, report.upper_bound, report.approx_ratio) == (2, 12, 6.0)

    @pytest.mark.parametrize("d", range(3, 12))
    def test_ratio_formula_equals_upper_over_lower(self, d):
        report = ccc_bounds(d)
        assert report.approx_ratio == report.upper_bound / report.lower_bound
        assert report.approx_ratio == 3 * 2 ** (d // 2 - 1)

    @pytest.mark.parametrize("d", range(3, 8))
    def test_construction_meets_lower_bound(self, d):
        assert ccc_level_zero_set(d).claimed_size == ccc_bounds(d).lower_bound

    def test_invalid_dimension(self):
        with pytest.raises(InvalidDimensionError):
            ccc_bounds(2)


class TestButterflyBounds:

    @pytest.mark.parametrize("d,mu,mu_t", [(2, 6, 4), (3, 14, 8), (10, 2046, 1024)])
    def test_exact(self, d, mu, mu_t):
        report = bf_exact(d)
        assert report.exact == mu
        assert report.total_exact == mu_t
        assert report.approx_ratio == 1.0

    def test_d1_is_the_four_cycle(self):
        report = bf_exact(1)
        assert report.lower_bound == 2
        assert report.exact == 3
        assert report.total_exact == 2
        assert report.notes

    @pytest.mark.parametrize("d", range(1, 8))
    def test_construction_meets_lower_bound(self, d):
        assert bf_mv_set(d).claimed_size == bf_exact(d).lower_bound


class TestHamming:

    def test_values(self):
        assert hamming_total_lower(2, 4) == Fraction(1, 5)
        assert hamming_total_lower(2, 2) == Fraction(1, 6)
        assert hamming_total_lower(3, 3) == Fraction(1, 4)
        assert hypercube_total_lower(4) == Fraction(1, 5)

    def test_domain(self):
        with pytest.raises(InvalidArgumentError):
            hamming_total_lower(1, 3)
        with pytest.raises(InvalidArgumentError):
            hamming_total_lower(2, 1)


class TestReports:

    def test_lower_above_upper_rejected(self):
        with pytest.raises(ValidationError):
            BoundsReport(
                topology=TopologySpec(kind="hypercube", d=3),
                lower_bound=6,
                lower_source="a",
                upper_bound=5,
                upper_source="b",
                approx_ratio=1.0,
            )

    def test_hypercube_table_csv(self):
        lines = rows_to_csv(hypercube_table_rows()).splitlines()
        assert lines == [
            "d,n,mu,lower_bound,upper_bound",
            "1,2,=2,1,2",
            "2,4,=3,2,3",
            "3,8,=5,3,5",
            "4,16,=9,6,9",
            "5,32,=16,11,16",
            ">=6,2^d,<=2^(d-1),,",
        ]

    def test_rows_beyond_table(self):
        rows = hypercube_table_rows([6, 7], include_general=False)
        assert rows == [("6", "64", "<=32", "21", "32"), ("7", "128", "<=64", "42", "64")]
