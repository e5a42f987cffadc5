"""
Named graph families with deterministic vertex labellings.

Words and subsets are enumerated lexicographically, so vertex indices (and
every certificate built on top of them) are stable across runs.
"""
import logging
from itertools import combinations, product
from math import comb, prod
from typing import Iterable, List, Optional, Sequence

import networkx as nx

from graph_addressing.constants import DEFAULT_MAX_VERTICES
from graph_addressing.graphs.core import (
    Edge,
    Family,
    Graph,
    GraphError,
    GraphSizeError,
)

logger = logging.getLogger(__name__)


def check_size(count: int, max_vertices: int, what: str):
    if count > max_vertices:
        raise GraphSizeError(
            f"{what} would have {count} vertices, above the configured cap of {max_vertices}"
        )


def gen_complete(n: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    if n < 1:
        raise GraphError(f"Complete graph needs n >= 1, got {n}")
    check_size(n, max_vertices, f"K_{n}")
    g = nx.complete_graph(n)
    return Graph.from_edges(n, g.edges(), name=f"K_{n}", family=Family("complete", (n,)))


def gen_complete_multipartite(
    sizes: Sequence[int], max_vertices: int = DEFAULT_MAX_VERTICES
) -> Graph:
    if not sizes:
        raise GraphError("Complete multipartite graph needs at least one class")
    if any(s < 1 for s in sizes):
        raise GraphError(f"Class sizes must be positive, got {list(sizes)}")
    total = sum(sizes)
    if total < 2:
        raise GraphError("Complete multipartite graph needs at least two vertices")
    check_size(total, max_vertices, "Complete multipartite graph")
    g = nx.complete_multipartite_graph(*sizes)
    return Graph.from_edges(
        total,
        g.edges(),
        name="K_{" + ",".join(str(s) for s in sizes) + "}",
        labels=[g.nodes[v]["subset"] for v in range(total)],
        family=Family("multipartite", tuple(sizes)),
    )


def gen_hamming(n: int, q: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    if n < 1 or q < 2:
        raise GraphError(f"Hamming graph needs n >= 1 and q >= 2, got n={n}, q={q}")
    check_size(q**n, max_vertices, f"H({n},{q})")
    words = list(product(range(q), repeat=n))
    index = {w: i for i, w in enumerate(words)}
    edges = []
    for w in words:
        for position in range(n):
            for letter in range(w[position] + 1, q):
                neighbour = w[:position] + (letter,) + w[position + 1 :]
                edges.append((index[w], index[neighbour]))
    return Graph.from_edges(
        len(words), edges, name=f"H({n},{q})", labels=words, family=Family("hamming", (n, q))
    )


def gen_triangular(n: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    """Line graph of K_n, vertices are the 2-subsets of 0..n-1 in lexicographic order"""
    if n < 4:
        raise GraphError(f"Triangular graph needs n >= 4, got {n}")
    check_size(comb(n, 2), max_vertices, f"T_{n}")
    line = nx.line_graph(nx.complete_graph(n))
    pairs = sorted(tuple(sorted(e)) for e in line.nodes())
    index = {p: i for i, p in enumerate(pairs)}
    edges = [
        (index[tuple(sorted(a))], index[tuple(sorted(b))]) for a, b in line.edges()
    ]
    return Graph.from_edges(
        len(pairs),
        edges,
        name=f"T_{n}",
        labels=[frozenset(p) for p in pairs],
        family=Family("triangular", (n,)),
    )


def gen_johnson(n: int, m: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    if not n >= m >= 2:
        raise GraphError(f"Johnson graph needs n >= m >= 2, got n={n}, m={m}")
    check_size(comb(n, m), max_vertices, f"J({n},{m})")
    subsets = [frozenset(s) for s in combinations(range(n), m)]
    edges = [
        (i, j)
        for i, j in combinations(range(len(subsets)), 2)
        if len(subsets[i] & subsets[j]) == m - 1
    ]
    return Graph.from_edges(
        len(subsets), edges, name=f"J({n},{m})", labels=subsets, family=Family("johnson", (n, m))
    )


def gen_petersen() -> Graph:
    """Kneser graph K(5,2): 2-subsets of 0..4, adjacent when disjoint"""
    subsets = [frozenset(s) for s in combinations(range(5), 2)]
    edges = [
        (i, j)
        for i, j in combinations(range(len(subsets)), 2)
        if not subsets[i] & subsets[j]
    ]
    return Graph.from_edges(
        len(subsets), edges, name="Petersen", labels=subsets, family=Family("petersen")
    )


def gen_clebsch() -> Graph:
    """
    Folded 5-cube: 5-bit words modulo complementation, represented by their
    first four bits. Neighbours differ in one of the four bits, or in all four
    (flipping the dropped fifth bit and complementing).
    """
    words = list(product(range(2), repeat=4))
    edges = [
        (i, j)
        for i, j in combinations(range(16), 2)
        if sum(a != b for a, b in zip(words[i], words[j])) in (1, 4)
    ]
    return Graph.from_edges(16, edges, name="Clebsch", labels=words, family=Family("clebsch"))


def gen_tree(
    parent: Sequence[Optional[int]], name: str = "", max_vertices: int = DEFAULT_MAX_VERTICES
) -> Graph:
    """
    Tree from a parent list: exactly one root marked with None or -1, every
    other entry the index of its parent.
    """
    n = len(parent)
    if n == 0:
        raise GraphError("Empty parent list")
    check_size(n, max_vertices, name or "Tree")
    roots = [v for v, p in enumerate(parent) if p is None or p == -1]
    if len(roots) != 1:
        raise GraphError(f"Parent list must have exactly one root, found {roots}")
    edges: List[Edge] = []
    for v, p in enumerate(parent):
        if p is None or p == -1:
            continue
        if not 0 <= p < n or p == v:
            raise GraphError(f"Vertex {v} has invalid parent {p}")
        edges.append((v, p))
    for v in range(n):
        seen = {v}
        current = parent[v]
        while current is not None and current != -1:
            if current in seen:
                raise GraphError(f"Parent list has a cycle through vertex {current}")
            seen.add(current)
            current = parent[current]
    return Graph.from_edges(n, edges, name=name or f"tree({n})", family=Family("tree", (n,)))


def gen_path(n: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    if n < 1:
        raise GraphError(f"Path needs n >= 1, got {n}")
    check_size(n, max_vertices, f"P_{n}")
    return gen_tree([-1] + list(range(n - 1)), name=f"P_{n}", max_vertices=max_vertices)


def gen_star(n: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    if n < 1:
        raise GraphError(f"Star needs n >= 1, got {n}")
    check_size(n, max_vertices, f"Star on {n} vertices")
    return gen_tree([-1] + [0] * (n - 1), name=f"K_{{1,{n - 1}}}", max_vertices=max_vertices)


def gen_cycle(n: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    if n < 3:
        raise GraphError(f"Cycle needs n >= 3, got {n}")
    check_size(n, max_vertices, f"C_{n}")
    return Graph.from_edges(
        n, nx.cycle_graph(n).edges(), name=f"C_{n}", family=Family("cycle", (n,))
    )


def add_edges(graph: Graph, extra: Iterable[Edge]) -> Graph:
    extra = list(extra)
    return Graph.from_edges(
        graph.n,
        list(graph.edges) + extra,
        name=graph.name + "".join(f"+{u}-{v}" for u, v in extra),
        labels=graph.labels,
    )


def cartesian_product(
    factors: Sequence[Graph], max_vertices: int = DEFAULT_MAX_VERTICES
) -> Graph:
    """
    Vertices are tuples in lexicographic order, first factor most significant.
    Two tuples are adjacent when they differ in exactly one coordinate and that
    coordinate is an edge of its factor.
    """
    if not factors:
        raise GraphError("Cartesian product needs at least one factor")
    if len(factors) == 1:
        return factors[0]
    orders = [f.n for f in factors]
    check_size(prod(orders), max_vertices, "Cartesian product")
    tuples = list(product(*(range(n) for n in orders)))
    index = {t: i for i, t in enumerate(tuples)}
    edges = []
    for t in tuples:
        for position, factor in enumerate(factors):
            for neighbour in factor.adjacency[t[position]]:
                if neighbour > t[position]:
                    other = t[:position] + (neighbour,) + t[position + 1 :]
                    edges.append((index[t], index[other]))
    return Graph.from_edges(
        len(tuples),
        edges,
        name=" □ ".join(str(f) for f in factors),
        labels=tuples,
        family=Family("product", factors=tuple(factors)),
    )
