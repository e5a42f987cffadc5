"""
Constructive addressings: Hamming graphs, complete graphs, trees, products,
and the published certificates that have no family construction.
"""
import logging
from itertools import product
from math import prod
from typing import List, Optional, Sequence

import networkx as nx

from graph_addressing.addressing.core import (
    Addressing,
    AddressingError,
    Biclique,
    Symbol,
)
from graph_addressing.constants import DEFAULT_MAX_VERTICES
from graph_addressing.graphs.core import Graph
from graph_addressing.graphs.families import check_size

logger = logging.getLogger(__name__)


def hamming_addressing(n: int, q: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> Addressing:
    """
    Column (i, t) for coordinate i and letter t < q - 1 puts ``a`` on words
    with x_i = t and ``b`` on words with x_i > t. A pair of words is split by
    exactly one column per coordinate where they differ.
    """
    if n < 1 or q < 2:
        raise AddressingError(f"Hamming addressing needs n >= 1 and q >= 2, got n={n}, q={q}")
    check_size(q**n, max_vertices, f"H({n},{q})")
    words = list(product(range(q), repeat=n))
    rows = []
    for word in words:
        row = []
        for i in range(n):
            for t in range(q - 1):
                if word[i] == t:
                    row.append(Symbol.A)
                elif word[i] > t:
                    row.append(Symbol.B)
                else:
                    row.append(Symbol.ZERO)
        rows.append(tuple(row))
    return Addressing(len(words), n * (q - 1), tuple(rows))


def complete_addressing(n: int) -> Addressing:
    return hamming_addressing(1, n)


def concat_addressing(parts: Sequence[Addressing], factor_orders: Sequence[int]) -> Addressing:
    """Addressing of the Cartesian product, vertex order as in ``cartesian_product``"""
    if len(parts) != len(factor_orders) or not parts:
        raise AddressingError(
            f"Need one addressing per factor, got {len(parts)} for {len(factor_orders)} factors"
        )
    for i, (part, order) in enumerate(zip(parts, factor_orders)):
        if part.n != order:
            raise AddressingError(f"Factor {i} has {order} vertices but {part.n} addresses")
    rows = tuple(
        sum((parts[i].cells[x] for i, x in enumerate(vertex)), ())
        for vertex in product(*(range(order) for order in factor_orders))
    )
    return Addressing(prod(factor_orders), sum(p.t for p in parts), rows)


def tree_addressing(tree: Graph) -> Addressing:
    """
    One column per tree edge: the component holding the smaller endpoint gets
    ``a``, the other ``b``. A pair is split once per edge on its path.
    """
    if not tree.is_tree():
        raise AddressingError(f"{tree} is not a tree")
    columns = []
    for u, v in tree.sorted_edges():
        cut = tree.nx_graph.copy()
        cut.remove_edge(u, v)
        side = nx.node_connected_component(cut, u)
        columns.append([Symbol.A if w in side else Symbol.B for w in range(tree.n)])
    return Addressing.from_columns(tree.n, columns)


def constructive_addressing(graph: Graph) -> Optional[Addressing]:
    """A known optimal-or-better construction for the graph's family, if there is one"""
    family = graph.family
    if family is not None:
        if family.kind == "complete":
            return complete_addressing(graph.n) if graph.n > 1 else Addressing(1, 0, ((),))
        if family.kind == "hamming":
            return hamming_addressing(*family.params)
        if family.kind == "product":
            parts = [constructive_addressing(f) for f in family.factors]
            if any(p is None for p in parts):
                return None
            return concat_addressing(parts, [f.n for f in family.factors])
    if graph.is_tree():
        return tree_addressing(graph) if graph.n > 1 else Addressing(1, 0, ((),))
    return None


# Published partition of D(T_5) into six bicliques, vertices written as
# 2-subsets of {1..5}.
T5_PARTITION = (
    (("12", "13", "14", "15"), ("23", "24", "25", "34", "35", "45")),
    (("12", "25"), ("13", "14", "34", "35", "45")),
    (("23", "24"), ("15", "25", "34", "35", "45")),
    (("13", "23", "35"), ("14", "24", "45")),
    (("15",), ("12", "13", "14", "34")),
    (("34",), ("25", "35", "45")),
)


def _vertex_of_pair(graph: Graph, pair: str) -> int:
    target = frozenset(int(c) - 1 for c in pair)
    return graph.labels.index(target)


def known_partition(graph: Graph) -> Optional[List[Biclique]]:
    family = graph.family
    if family is not None and family.kind == "triangular" and family.params == (5,):
        return [
            Biclique.of(
                (_vertex_of_pair(graph, p) for p in left),
                (_vertex_of_pair(graph, p) for p in right),
            )
            for left, right in T5_PARTITION
        ]
    return None
