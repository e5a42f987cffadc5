import unittest

import networkx as nx

from graph_addressing.addressing.constructions import known_partition, tree_addressing
from graph_addressing.addressing.core import Biclique, verify_biclique_partition
from graph_addressing.config import SearchConfig, ToolkitConfig
from graph_addressing.graphs.core import Graph, Multigraph, distance_multigraph
from graph_addressing.graphs.families import (
    cartesian_product,
    gen_complete,
    gen_complete_multipartite,
    gen_cycle,
    gen_hamming,
    gen_path,
    gen_triangular,
)
from graph_addressing.graphs.specs import parse_graph_spec
from graph_addressing.search import (
    SearchStatus,
    bp_report,
    greedy_upper,
    min_biclique_partition,
)

from .utils import test_config


class TestGreedy(unittest.TestCase):
    def test_edgeless(self):
        assert greedy_upper(Multigraph.edgeless(4)) == []

    def test_complete(self):
        parts = greedy_upper(distance_multigraph(gen_complete(4)))
        assert parts == [
            Biclique.of([0], [1, 2, 3]),
            Biclique.of([1], [2, 3]),
            Biclique.of([2], [3]),
        ]

    def test_always_a_partition(self):
        graphs = [
            gen_hamming(2, 2),
            gen_hamming(2, 3),
            gen_triangular(5),
            gen_cycle(7),
            gen_path(6),
            gen_complete_multipartite([2, 2, 2, 2]),
        ]
        for graph in graphs:
            with self.subTest(graph=str(graph)):
                h = distance_multigraph(graph)
                parts = greedy_upper(h)
                assert verify_biclique_partition(h, parts) is None


class TestExactSearch(unittest.TestCase):
    def test_known_values(self):
        cases = [
            (gen_complete(3), 2),
            (gen_complete(4), 3),
            (gen_complete(5), 4),
            (gen_complete(6), 5),
            (gen_hamming(2, 2), 2),
            (gen_complete_multipartite([2, 2]), 2),
            (gen_cycle(5), 4),
            (gen_path(5), 4),
            (gen_triangular(4), 4),
            (gen_complete_multipartite([2, 2, 2]), 4),
            (cartesian_product([gen_complete(3), gen_complete(2)]), 3),
        ]
        for graph, expected in cases:
            with self.subTest(graph=str(graph)):
                h = distance_multigraph(graph)
                result = min_biclique_partition(h, test_config.search)
                assert result.status is SearchStatus.OPTIMAL
                assert result.optimal
                assert result.best_size == expected
                assert result.proven_lower == expected
                assert len(result.certificate) == expected
                assert verify_biclique_partition(h, result.certificate) is None

    def test_edgeless(self):
        result = min_biclique_partition(Multigraph.edgeless(3))
        assert result.status is SearchStatus.OPTIMAL
        assert result.best_size == 0
        assert result.certificate == []

    def test_threads_agree(self):
        for graph in [gen_triangular(4), gen_complete(5), gen_cycle(6)]:
            h = distance_multigraph(graph)
            sizes = set()
            for threads in (1, 3):
                config = SearchConfig(node_budget=200_000, time_budget=120, threads=threads)
                with self.subTest(graph=str(graph), threads=threads):
                    result = min_biclique_partition(h, config)
                    assert result.optimal
                    assert verify_biclique_partition(h, result.certificate) is None
                    sizes.add(result.best_size)
            assert len(sizes) == 1

    def test_bound_interval(self):
        h = distance_multigraph(gen_triangular(4))
        result = min_biclique_partition(h, SearchConfig(bound_interval=2))
        assert result.best_size == 4
        assert result.optimal

    def test_budget_exhausted(self):
        h = distance_multigraph(gen_triangular(4))
        with self.assertLogs("graph_addressing.search.solver", level="WARNING"):
            result = min_biclique_partition(h, SearchConfig(node_budget=1))
        assert result.status is SearchStatus.BUDGET_EXHAUSTED
        assert result.proven_lower == 3
        assert result.best_size >= 4
        assert verify_biclique_partition(h, result.certificate) is None

    def test_larger_budget_never_weakens_the_result(self):
        budgets = [1, 10, 100, 1_000, 200_000]
        for graph in [gen_triangular(4), gen_cycle(6), gen_complete_multipartite([2, 2, 2])]:
            h = distance_multigraph(graph)
            results = [
                min_biclique_partition(h, SearchConfig(node_budget=budget, time_budget=600))
                for budget in budgets
            ]
            for smaller, larger in zip(results, results[1:]):
                with self.subTest(graph=str(graph), nodes=larger.nodes_explored):
                    assert larger.proven_lower >= smaller.proven_lower
                    assert larger.best_size <= smaller.best_size
            assert results[-1].optimal

    def test_trees_match_their_construction(self):
        for n in range(2, 8):
            for number, tree in enumerate(nx.nonisomorphic_trees(n)):
                graph = Graph.from_edges(n, tree.edges())
                with self.subTest(n=n, tree=number):
                    addressing = tree_addressing(graph)
                    result = min_biclique_partition(distance_multigraph(graph), test_config.search)
                    assert result.optimal
                    assert result.best_size == addressing.t == n - 1

    def test_initial_upper_caps_the_targets(self):
        h = distance_multigraph(gen_triangular(4))
        result = min_biclique_partition(h, SearchConfig(initial_upper=3))
        assert result.status is SearchStatus.LOWER_BOUND_ONLY
        assert result.proven_lower == 3
        assert result.nodes_explored == 0

    def test_seeds(self):
        h = distance_multigraph(gen_complete(3))
        with self.assertLogs("graph_addressing.search.solver", level="WARNING"):
            result = min_biclique_partition(h, seeds=[[Biclique.of([0], [1])]])
        assert result.best_size == 2

    def test_t5_needs_more_than_four(self):
        t5 = gen_triangular(5)
        h = distance_multigraph(t5)
        config = SearchConfig(node_budget=10**7, time_budget=3600, initial_upper=5)
        result = min_biclique_partition(h, config, seeds=[known_partition(t5)])
        assert result.status is SearchStatus.LOWER_BOUND_ONLY
        assert result.proven_lower == 5
        assert result.best_size == 6


class TestReport(unittest.TestCase):
    def test_hamming(self):
        report = bp_report(gen_hamming(2, 3), test_config)
        assert report.spectral_lower == 4
        assert report.constructive_upper == 4
        assert report.constructive_eigensharp
        assert report.search.optimal
        assert report.settled
        assert (report.lower, report.upper) == (4, 4)
        assert report.winkler_upper == 8
        assert report.graham_pollak_upper == 16

    def test_triangular_improved_lower(self):
        report = bp_report(gen_triangular(4), test_config)
        assert report.spectral_lower == 3
        assert report.improved_lower == 4
        assert report.constructive_upper is None
        assert report.search.best_size == 4
        assert report.settled

    def test_search_skipped_above_cap(self):
        config = ToolkitConfig.model_validate({"max_search_vertices": 9})
        with self.assertLogs("graph_addressing.search.report", level="WARNING"):
            report = bp_report(gen_triangular(5), config)
        assert report.search.status is SearchStatus.LOWER_BOUND_ONLY
        assert report.search.nodes_explored == 0
        assert report.known_upper == 6
        assert report.improved_lower == 5
        assert (report.lower, report.upper) == (5, 6)
        assert not report.settled

    def test_cocktail_party(self):
        report = bp_report(gen_complete_multipartite([2, 2, 2]), test_config)
        assert (report.hoffman_zaks.lower, report.hoffman_zaks.upper) == (4, 4)
        assert report.search.best_size == 4

    def test_product_sandwich(self):
        report = bp_report(parse_graph_spec("complete:3□path:3"), test_config)
        sandwich = report.product
        assert sandwich.factor_lowers == [2, 2]
        assert sandwich.factor_uppers == [2, 2]
        assert sandwich.product_lower == 4
        assert sandwich.product_upper == 4
        assert sandwich.inertia_bounds is None
        assert report.search.best_size == 4

    def test_product_sandwich_closes_skipped_search(self):
        config = ToolkitConfig.model_validate({"max_search_vertices": 9})
        with self.assertLogs("graph_addressing.search.report", level="WARNING"):
            report = bp_report(parse_graph_spec("cycle:5*cycle:5"), config)
        assert report.search.status is SearchStatus.LOWER_BOUND_ONLY
        assert report.product.factor_uppers == [4, 4]
        assert report.product.product_upper == 8
        assert (report.lower, report.upper) == (8, 8)
        assert report.settled

    def test_product_of_regular_factors(self):
        report = bp_report(cartesian_product([gen_complete(3), gen_cycle(4)]), test_config)
        assert report.product.inertia_bounds is not None
        assert report.product.inertia_bounds.predicted == report.inertia
