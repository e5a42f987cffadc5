"""
Graph and distance multigraph representations.

Vertices are dense integers 0..n-1. Graphs are immutable; derived data
(adjacency lists, networkx view) is cached on first use.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import FrozenSet, Iterable, Iterator, List, Optional, Tuple

import networkx as nx

from graph_addressing.linalg.matrix import IntSymMatrix

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


class GraphError(Exception):
    ...


class GraphSizeError(GraphError):
    ...


class DisconnectedGraphError(GraphError):
    def __init__(self, u: int, v: int):
        super().__init__(f"Graph is disconnected: no path between {u} and {v}")
        self.u = u
        self.v = v


@dataclass(frozen=True)
class Family:
    """Which generator produced a graph, so that constructions can be dispatched"""

    kind: str
    params: Tuple[int, ...] = ()
    factors: Tuple["Graph", ...] = ()


@dataclass(frozen=True)
class Graph:
    n: int
    edges: FrozenSet[Edge]
    name: str = field(default="", compare=False)
    labels: Optional[Tuple[object, ...]] = field(default=None, compare=False, repr=False)
    family: Optional[Family] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"Vertex count must be nonnegative, got {self.n}")
        for u, v in self.edges:
            if not u < v:
                raise GraphError(f"Edge ({u}, {v}) is not normalized as u < v")
            if v >= self.n or u < 0:
                raise GraphError(f"Edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError(f"{len(self.labels)} labels for {self.n} vertices")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Edge],
        name: str = "",
        labels: Optional[Iterable[object]] = None,
        family: Optional[Family] = None,
    ) -> "Graph":
        normalized = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"Loop at vertex {u}")
            pair = (min(u, v), max(u, v))
            if pair in normalized:
                raise GraphError(f"Repeated edge {pair}")
            normalized.add(pair)
        return cls(
            n=n,
            edges=frozenset(normalized),
            name=name,
            labels=tuple(labels) if labels is not None else None,
            family=family,
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        neighbours: List[List[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            neighbours[u].append(v)
            neighbours[v].append(u)
        return tuple(tuple(sorted(ns)) for ns in neighbours)

    def regular_degree(self) -> Optional[int]:
        degrees = {len(ns) for ns in self.adjacency}
        return degrees.pop() if len(degrees) == 1 else None

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    @cached_property
    def nx_graph(self) -> nx.Graph:
        g = nx.Graph(name=self.name)
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    def is_connected(self) -> bool:
        return self.n > 0 and nx.is_connected(self.nx_graph)

    def is_tree(self) -> bool:
        return self.n > 0 and nx.is_tree(self.nx_graph)

    def adjacency_matrix(self) -> IntSymMatrix:
        return IntSymMatrix(
            tuple(
                tuple(int(self.has_edge(i, j)) for j in range(self.n))
                for i in range(self.n)
            )
        )

    def format(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines.extend(f"{u} {v}" for u, v in self.sorted_edges())
        return "\n".join(lines)

    def __str__(self):
        return self.name or f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Multigraph:
    n: int
    mult: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.mult) != self.n or any(len(row) != self.n for row in self.mult):
            raise GraphError(f"Multiplicity matrix must be {self.n}x{self.n}")
        for u in range(self.n):
            if self.mult[u][u] != 0:
                raise GraphError(f"Nonzero loop multiplicity at {u}")
            for v in range(u + 1, self.n):
                if self.mult[u][v] != self.mult[v][u]:
                    raise GraphError(f"Asymmetric multiplicity at ({u}, {v})")
                if self.mult[u][v] < 0:
                    raise GraphError(f"Negative multiplicity at ({u}, {v})")

    @classmethod
    def from_matrix(cls, matrix: IntSymMatrix) -> "Multigraph":
        return cls(matrix.order, matrix.rows)

    @classmethod
    def edgeless(cls, n: int) -> "Multigraph":
        return cls(n, tuple((0,) * n for _ in range(n)))

    def as_matrix(self) -> IntSymMatrix:
        return IntSymMatrix(self.mult)

    def pairs(self) -> Iterator[Tuple[int, int, int]]:
        """(u, v, multiplicity) for u < v with positive multiplicity, lexicographically"""
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if self.mult[u][v]:
                    yield u, v, self.mult[u][v]

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, _, m in self.pairs())

    @property
    def max_multiplicity(self) -> int:
        return max((m for _, _, m in self.pairs()), default=0)


def diameter(graph: Graph) -> int:
    return max(max(row) for row in all_pairs_distances(graph).rows) if graph.n else 0


def all_pairs_distances(graph: Graph, workers: int = 1) -> IntSymMatrix:
    """
    BFS distance matrix. Sources may be spread over worker threads; rows are
    assembled in vertex order, so the result does not depend on ``workers``.
    """
    if graph.n == 0:
        return IntSymMatrix(())

    def bfs_row(source: int) -> Tuple[int, ...]:
        lengths = nx.single_source_shortest_path_length(graph.nx_graph, source)
        if len(lengths) != graph.n:
            missing = next(v for v in range(graph.n) if v not in lengths)
            raise DisconnectedGraphError(min(source, missing), max(source, missing))
        return tuple(lengths[v] for v in range(graph.n))

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            rows = tuple(executor.map(bfs_row, range(graph.n)))
    else:
        rows = tuple(bfs_row(s) for s in range(graph.n))
    return IntSymMatrix(rows)


def distance_multigraph(graph: Graph, workers: int = 1) -> Multigraph:
    return Multigraph.from_matrix(all_pairs_distances(graph, workers))
