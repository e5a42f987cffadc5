import unittest
from math import comb
from pathlib import Path
from tempfile import TemporaryDirectory

from graph_addressing.graphs.core import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    GraphSizeError,
    Multigraph,
    all_pairs_distances,
    diameter,
    distance_multigraph,
)
from graph_addressing.graphs.families import (
    add_edges,
    cartesian_product,
    gen_clebsch,
    gen_complete,
    gen_complete_multipartite,
    gen_cycle,
    gen_hamming,
    gen_johnson,
    gen_path,
    gen_petersen,
    gen_star,
    gen_tree,
    gen_triangular,
)
from graph_addressing.graphs.specs import (
    GraphSpecError,
    load_graph,
    parse_graph_spec,
    parse_graph_text,
)
from graph_addressing.linalg.matrix import IntSymMatrix


class TestGenerators(unittest.TestCase):
    def test_complete(self):
        for n in range(1, 7):
            with self.subTest(n=n):
                g = gen_complete(n)
                assert g.n == n
                assert g.m == comb(n, 2)
                if n > 1:
                    assert g.regular_degree() == n - 1

    def test_hamming_counts(self):
        for n, q in [(1, 2), (2, 2), (2, 3), (3, 2), (3, 3)]:
            with self.subTest(n=n, q=q):
                g = gen_hamming(n, q)
                assert g.n == q**n
                assert g.regular_degree() == n * (q - 1)
                assert g.labels[0] == (0,) * n
                assert g.labels[-1] == (q - 1,) * n

    def test_hamming_is_product_of_complete_graphs(self):
        g = gen_hamming(2, 3)
        product = cartesian_product([gen_complete(3), gen_complete(3)])
        assert g.edges == product.edges

    def test_triangular_is_strongly_regular(self):
        for n in range(4, 8):
            with self.subTest(n=n):
                g = gen_triangular(n)
                assert g.n == comb(n, 2)
                assert g.regular_degree() == 2 * (n - 2)
                assert g.labels[0] == frozenset({0, 1})
                for u in range(g.n):
                    for v in range(u + 1, g.n):
                        common = len(set(g.adjacency[u]) & set(g.adjacency[v]))
                        assert common == (n - 2 if g.has_edge(u, v) else 4)

    def test_johnson_two_is_triangular(self):
        for n in range(4, 8):
            with self.subTest(n=n):
                assert gen_johnson(n, 2).edges == gen_triangular(n).edges

    def test_johnson_counts(self):
        g = gen_johnson(6, 3)
        assert g.n == 20
        assert g.regular_degree() == 9

    def test_petersen_and_clebsch(self):
        petersen = gen_petersen()
        assert (petersen.n, petersen.m, petersen.regular_degree()) == (10, 15, 3)
        assert diameter(petersen) == 2
        clebsch = gen_clebsch()
        assert (clebsch.n, clebsch.regular_degree()) == (16, 5)
        assert diameter(clebsch) == 2
        for u, v in clebsch.edges:
            # triangle free
            assert not set(clebsch.adjacency[u]) & set(clebsch.adjacency[v])

    def test_multipartite(self):
        g = gen_complete_multipartite([2, 4])
        assert g.n == 6
        assert g.m == 8
        assert not g.has_edge(0, 1)
        assert g.has_edge(0, 2)

    def test_trees(self):
        assert gen_path(4).sorted_edges() == [(0, 1), (1, 2), (2, 3)]
        assert gen_star(5).sorted_edges() == [(0, 1), (0, 2), (0, 3), (0, 4)]
        assert gen_tree([None, 0, 0, 1]).is_tree()

    def test_invalid_trees(self):
        for parent in [[], [-1, -1], [1, 0], [-1, 2, 1], [-1, 5]]:
            with self.subTest(parent=parent):
                with self.assertRaises(GraphError):
                    gen_tree(parent)

    def test_cycle(self):
        g = gen_cycle(5)
        assert g.regular_degree() == 2
        assert diameter(g) == 2
        with self.assertRaises(GraphError):
            gen_cycle(2)

    def test_size_cap(self):
        with self.assertRaises(GraphSizeError):
            gen_hamming(4, 4, max_vertices=100)
        with self.assertRaises(GraphSizeError):
            cartesian_product([gen_complete(20), gen_complete(20)], max_vertices=100)
        builders = [gen_complete, gen_path, gen_star, gen_cycle]
        for builder in builders:
            with self.subTest(builder=builder.__name__):
                with self.assertRaises(GraphSizeError):
                    builder(10**5)
                assert builder(11, max_vertices=11).n == 11
        with self.assertRaises(GraphSizeError):
            gen_tree([-1] + [0] * 10, max_vertices=10)

    def test_add_edges(self):
        g = add_edges(gen_complete_multipartite([2, 4]), [(0, 1)])
        assert g.has_edge(0, 1)
        assert g.m == 9
        assert g.family is None
        with self.assertRaises(GraphError):
            add_edges(gen_complete(3), [(0, 1)])


class TestGraphCore(unittest.TestCase):
    def test_from_edges_rejects_loops(self):
        with self.assertRaises(GraphError):
            Graph.from_edges(2, [(1, 1)])

    def test_from_edges_rejects_out_of_range(self):
        with self.assertRaises(GraphError):
            Graph.from_edges(2, [(0, 2)])

    def test_distances_of_path(self):
        d = all_pairs_distances(gen_path(4))
        assert d.rows[0] == (0, 1, 2, 3)
        assert d.is_hollow()

    def test_distances_independent_of_workers(self):
        g = gen_petersen()
        assert all_pairs_distances(g, workers=1) == all_pairs_distances(g, workers=4)

    def test_disconnected(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        with self.assertRaises(DisconnectedGraphError) as cm:
            all_pairs_distances(g)
        assert (cm.exception.u, cm.exception.v) == (0, 2)

    def test_hamming_distance_is_hamming_metric(self):
        g = gen_hamming(3, 3)
        d = all_pairs_distances(g)
        for u in range(0, g.n, 4):
            for v in range(g.n):
                expected = sum(a != b for a, b in zip(g.labels[u], g.labels[v]))
                assert d[u, v] == expected

    def test_product_distance_is_sum(self):
        a, b = gen_path(3), gen_cycle(4)
        product = cartesian_product([a, b])
        da, db, dp = all_pairs_distances(a), all_pairs_distances(b), all_pairs_distances(product)
        for u, (x1, y1) in enumerate(product.labels):
            for v, (x2, y2) in enumerate(product.labels):
                assert dp[u, v] == da[x1, x2] + db[y1, y2]

    def test_triangle_inequality(self):
        graphs = [
            gen_petersen(),
            gen_clebsch(),
            gen_triangular(6),
            gen_hamming(3, 3),
            gen_johnson(7, 3),
            gen_path(50),
            cartesian_product([gen_cycle(7), gen_star(4)]),
            add_edges(gen_complete_multipartite([2, 4]), [(0, 1)]),
        ]
        for graph in graphs:
            d = all_pairs_distances(graph)
            n = graph.n
            with self.subTest(graph=str(graph)):
                assert n <= 50
                for u in range(n):
                    for v in range(n):
                        assert d[u, v] == d[v, u]
                        assert (d[u, v] == 0) == (u == v)
                        for w in range(n):
                            assert d[u, w] <= d[u, v] + d[v, w]

    def test_diameter_two_distance_matrix(self):
        graphs = [
            gen_complete(5),
            gen_petersen(),
            gen_clebsch(),
            gen_triangular(5),
            gen_triangular(6),
            gen_johnson(6, 2),
            gen_hamming(2, 3),
            gen_complete_multipartite([2, 2, 2]),
            gen_cycle(5),
        ]
        for graph in graphs:
            with self.subTest(graph=str(graph)):
                assert graph.regular_degree() is not None
                assert diameter(graph) <= 2
                ones, identity = IntSymMatrix.ones(graph.n), IntSymMatrix.identity(graph.n)
                expected = (ones - identity).scaled(2) - graph.adjacency_matrix()
                assert all_pairs_distances(graph) == expected

    def test_multigraph(self):
        h = distance_multigraph(gen_path(3))
        assert list(h.pairs()) == [(0, 1, 1), (0, 2, 2), (1, 2, 1)]
        assert h.total_multiplicity == 4
        assert h.max_multiplicity == 2
        assert Multigraph.edgeless(3).total_multiplicity == 0

    def test_multigraph_validation(self):
        with self.assertRaises(GraphError):
            Multigraph(2, ((0, 1), (2, 0)))
        with self.assertRaises(GraphError):
            Multigraph.from_matrix(IntSymMatrix(((1, 0), (0, 0))))

    def test_format(self):
        assert gen_path(3).format() == "3 2\n0 1\n1 2"


class TestSpecs(unittest.TestCase):
    def test_families(self):
        cases = {
            "complete:5": 5,
            "hamming:2,3": 9,
            "triangular:5": 10,
            "johnson:6,3": 20,
            "petersen": 10,
            "clebsch": 16,
            "multipartite:2,2,2": 6,
            "path:4": 4,
            "cycle:5": 5,
            "star:5": 5,
            "tree:-1,0,0,1": 4,
        }
        for spec, n in cases.items():
            with self.subTest(spec=spec):
                assert parse_graph_spec(spec).n == n

    def test_extra_edges(self):
        g = parse_graph_spec("multipartite:2,4+0-1")
        assert g.has_edge(0, 1)
        assert g.m == 9

    def test_products(self):
        for spec in ["complete:3□complete:2", "complete:3*complete:2", "product:complete:3*complete:2"]:
            with self.subTest(spec=spec):
                g = parse_graph_spec(spec)
                assert g.n == 6
                assert g.family.kind == "product"
                assert len(g.family.factors) == 2

    def test_errors(self):
        for spec in ["nonsense:3", "hamming:2", "complete:x", "complete:3+0_1"]:
            with self.subTest(spec=spec):
                with self.assertRaises(GraphSpecError):
                    parse_graph_spec(spec)

    def test_cap_is_part_of_the_cache_key(self):
        assert parse_graph_spec("hamming:3,3", 1000).n == 27
        with self.assertRaises(GraphSizeError):
            parse_graph_spec("hamming:3,3", 10)
        for spec in ["complete:11", "path:11", "cycle:11", "star:11", "tree:" + ",".join(["-1"] + ["0"] * 10)]:
            with self.subTest(spec=spec):
                with self.assertRaises(GraphSizeError):
                    parse_graph_spec(spec, 10)

    def test_text_format(self):
        g = parse_graph_text("# comment\n3 2\n0 1\n1 2\n")
        assert g.sorted_edges() == [(0, 1), (1, 2)]
        with self.assertRaises(GraphSpecError):
            parse_graph_text("3 2\n0 1\n")

    def test_load_graph_from_file(self):
        with TemporaryDirectory() as tmp:
            path = Path(tmp) / "square.txt"
            path.write_text("4 4\n0 1\n1 2\n2 3\n0 3\n")
            g = load_graph(str(path))
            assert g.n == 4
            assert g.name == "square"
            with self.assertRaises(GraphSizeError):
                load_graph(str(path), max_vertices=3)
