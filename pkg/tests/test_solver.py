"""
Тесты точного солвера и оракула полного перебора
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mutvis.bounds import bounds_for
from mutvis.core.errors import InvalidArgumentError, MutvisError, ResourceGuardError
from mutvis.core.graph import complete_graph, cycle_graph, path_graph
from mutvis.core.visibility import is_mutual_visibility_set, is_total_mutual_visibility_set
from mutvis.schemas import SetKind, SolveOptions
from mutvis.solver import branching_order, brute_force_mv, max_mv_set, max_total_mv_set, solve
from mutvis.topologies import gen_butterfly, gen_ccc, gen_hypercube

from .conftest import connected_graphs


class TestMaxMutualVisibility:

    def test_q3(self):
        report = max_mv_set(gen_hypercube(3))
        assert report.optimum == 5
        assert report.proven_optimal
        assert is_mutual_visibility_set(gen_hypercube(3), report.witness)

    @pytest.mark.parametrize("d,expected", [(1, 2), (2, 3)])
    def test_small_hypercubes(self, d, expected):
        assert max_mv_set(gen_hypercube(d)).optimum == expected

    @pytest.mark.slow
    def test_q4(self):
        assert max_mv_set(gen_hypercube(4)).optimum == 9

    @pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
    def test_cycles_match_brute_force(self, n):
        g = cycle_graph(n)
        assert max_mv_set(g).optimum == brute_force_mv(g).optimum

    def test_c4(self):
        assert max_mv_set(cycle_graph(4)).optimum == 3

    @pytest.mark.parametrize("d,expected", [(1, 3), (2, 6)])
    def test_butterflies(self, d, expected):
        report = max_mv_set(gen_butterfly(d))
        assert report.optimum == expected
        assert report.proven_optimal

    @pytest.mark.slow
    def test_ccc3(self):
        assert max_mv_set(gen_ccc(3)).optimum == 6

    def test_witness_labels(self):
        report = max_mv_set(gen_hypercube(2))
        assert len(report.witness_labels) == 3
        assert all(len(label) == 2 for label in report.witness_labels)

    def test_deterministic(self):
        g = gen_butterfly(2)
        assert max_mv_set(g).witness == max_mv_set(g).witness

    def test_branching_order(self):
        g = path_graph(4)
        assert branching_order(g) == [1, 2, 0, 3]


class TestMaxTotalVisibility:

    def test_ccc3_fast_path(self):
        report = max_total_mv_set(gen_ccc(3))
        assert report.optimum == 0
        assert report.proven_optimal
        assert report.nodes_explored == 0

    @pytest.mark.parametrize("d,expected", [(1, 2), (2, 4)])
    def test_butterflies(self, d, expected):
        g = gen_butterfly(d)
        report = max_total_mv_set(g)
        assert report.optimum == expected
        assert is_total_mutual_visibility_set(g, report.witness)

    def test_complete_graph(self):
        assert max_total_mv_set(complete_graph(3)).optimum == 3

    def test_dispatch_by_kind(self):
        g = gen_butterfly(1)
        assert solve(g, SolveOptions(kind=SetKind.TOTAL)).optimum == 2
        assert solve(g, SolveOptions()).optimum == 3


class TestOptions:

    def test_node_budget(self):
        g = gen_hypercube(3)
        report = max_mv_set(g, SolveOptions(node_budget=1))
        assert not report.proven_optimal
        assert report.optimum <= 5
        assert is_mutual_visibility_set(g, report.witness)

    def test_seed_lower_bound(self):
        g = gen_hypercube(3)
        report = max_mv_set(g, SolveOptions(initial_lower_bound=5))
        assert report.optimum == 5 and report.proven_optimal

    def test_seed_above_optimum(self):
        report = max_mv_set(gen_hypercube(3), SolveOptions(initial_lower_bound=6))
        assert report.optimum == 5 and report.proven_optimal

    def test_seed_unreached_within_budget(self):
        g = gen_hypercube(5)
        report = max_mv_set(g, SolveOptions(initial_lower_bound=17, symmetry=True, node_budget=200))
        assert not report.proven_optimal
        assert report.optimum >= 2
        assert is_mutual_visibility_set(g, report.witness)
        assert report.nodes_explored <= 201

    def test_seed_fallback_shares_node_budget(self):
        g = gen_hypercube(4)
        report = max_mv_set(g, SolveOptions(initial_lower_bound=10, node_budget=40))
        assert report.nodes_explored <= 41
        assert report.optimum >= 2
        assert is_mutual_visibility_set(g, report.witness)

    def test_symmetry(self):
        report = max_mv_set(gen_hypercube(3), SolveOptions(symmetry=True))
        assert report.optimum == 5
        assert 0 in report.witness

    def test_symmetry_refused_for_generic_graphs(self):
        with pytest.raises(MutvisError):
            max_mv_set(cycle_graph(5), SolveOptions(symmetry=True))

    def test_symmetry_refused_for_butterflies(self):
        with pytest.raises(MutvisError):
            max_mv_set(gen_butterfly(2), SolveOptions(symmetry=True))

    def test_workers(self):
        report = max_mv_set(gen_hypercube(3), SolveOptions(workers=3))
        assert report.optimum == 5
        assert is_mutual_visibility_set(gen_hypercube(3), report.witness)

    def test_column_cap(self):
        report = max_mv_set(gen_butterfly(2), SolveOptions(per_column_cap=2))
        assert report.optimum == 6

    def test_column_cap_needs_groups(self):
        with pytest.raises(InvalidArgumentError):
            max_mv_set(cycle_graph(5), SolveOptions(per_column_cap=1))

    def test_explicit_groups_must_be_disjoint(self):
        opts = SolveOptions(per_column_cap=1, column_groups=[[0, 1], [1, 2]])
        with pytest.raises(InvalidArgumentError):
            max_mv_set(cycle_graph(5), opts)

    def test_vertex_guard(self):
        with pytest.raises(ResourceGuardError):
            max_mv_set(gen_hypercube(6))

    def test_budgets_must_be_positive(self):
        with pytest.raises(ValueError):
            SolveOptions(node_budget=0)


class TestBruteForce:

    def test_path(self):
        assert brute_force_mv(path_graph(5)).optimum == 2

    def test_q3(self):
        assert brute_force_mv(gen_hypercube(3)).optimum == 5

    def test_bf1(self):
        assert brute_force_mv(gen_butterfly(1)).optimum == 3

    def test_total(self):
        assert brute_force_mv(cycle_graph(4), SetKind.TOTAL).optimum == 2

    def test_refuses_large_graphs(self):
        with pytest.raises(ResourceGuardError):
            brute_force_mv(gen_hypercube(5))

    @pytest.mark.property_based
    @given(connected_graphs(max_n=12))
    @settings(max_examples=100, deadline=None)
    def test_oracle_equivalence(self, g):
        assert max_mv_set(g).optimum == brute_force_mv(g).optimum

    @pytest.mark.property_based
    @given(connected_graphs(max_n=9), st.sampled_from([SetKind.MUTUAL, SetKind.TOTAL]))
    @settings(max_examples=50, deadline=None)
    def test_oracle_equivalence_by_kind(self, g, kind):
        report = solve(g, SolveOptions(kind=kind))
        assert report.optimum == brute_force_mv(g, kind).optimum


class TestConsistency:

    @pytest.mark.parametrize("d", [2, 3, pytest.param(4, marks=pytest.mark.slow)])
    def test_doubling(self, d):
        smaller = max_mv_set(gen_hypercube(d - 1)).optimum
        larger = max_mv_set(gen_hypercube(d)).optimum
        assert larger <= 2 * smaller

    @pytest.mark.parametrize("graph_factory,d", [(gen_hypercube, 3), (gen_butterfly, 1), (gen_butterfly, 2)])
    def test_optimum_within_bounds(self, graph_factory, d):
        g = graph_factory(d)
        report = bounds_for(g.topology)
        optimum = max_mv_set(g).optimum
        assert report.lower_bound <= optimum <= report.upper_bound
        assert optimum == report.exact
