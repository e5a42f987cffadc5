"""
The {0, a, b} addressing calculus and its biclique counterpart.

Column j of an addressing is the biclique whose left side holds the rows
with ``a`` in column j and whose right side holds the rows with ``b``.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from graph_addressing.graphs.core import Graph, Multigraph, all_pairs_distances

logger = logging.getLogger(__name__)


class AddressingError(Exception):
    ...


class BicliqueError(AddressingError):
    ...


class Symbol(Enum):
    ZERO = "0"
    A = "a"
    B = "b"

    @classmethod
    def parse(cls, char: str) -> "Symbol":
        try:
            return cls(char)
        except ValueError:
            raise AddressingError(f"Unknown address symbol '{char}', expected 0, a or b")

    def __str__(self):
        return self.value


Row = Tuple[Symbol, ...]


@dataclass(frozen=True)
class Addressing:
    n: int
    t: int
    cells: Tuple[Row, ...]

    def __post_init__(self):
        if len(self.cells) != self.n:
            raise AddressingError(f"{len(self.cells)} rows for n={self.n}")
        for v, row in enumerate(self.cells):
            if len(row) != self.t:
                raise AddressingError(f"Row {v} has length {len(row)}, expected {self.t}")

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> "Addressing":
        cells = tuple(tuple(Symbol.parse(c) for c in row) for row in rows)
        t = len(cells[0]) if cells else 0
        return cls(len(cells), t, cells)

    @classmethod
    def from_columns(cls, n: int, columns: Sequence[Sequence[Symbol]]) -> "Addressing":
        return cls(n, len(columns), tuple(tuple(col[v] for col in columns) for v in range(n)))

    def column(self, j: int) -> Tuple[Symbol, ...]:
        return tuple(row[j] for row in self.cells)

    def columns(self) -> Iterator[Tuple[Symbol, ...]]:
        return (self.column(j) for j in range(self.t))

    def row_string(self, v: int) -> str:
        return "".join(s.value for s in self.cells[v])

    def to_strings(self) -> List[str]:
        return [self.row_string(v) for v in range(self.n)]


@dataclass(frozen=True)
class Biclique:
    left: FrozenSet[int]
    right: FrozenSet[int]

    def __post_init__(self):
        if not self.left or not self.right:
            raise BicliqueError("Biclique sides must be nonempty")
        if self.left & self.right:
            raise BicliqueError(f"Biclique sides overlap in {sorted(self.left & self.right)}")

    @classmethod
    def of(cls, left: Iterable[int], right: Iterable[int]) -> "Biclique":
        return cls(frozenset(left), frozenset(right))

    @property
    def size(self) -> int:
        return len(self.left) * len(self.right)

    def covers(self, u: int, v: int) -> bool:
        return (u in self.left and v in self.right) or (u in self.right and v in self.left)

    def check_bounds(self, n: int):
        outside = [v for v in self.left | self.right if not 0 <= v < n]
        if outside:
            raise BicliqueError(f"Vertices {sorted(outside)} outside 0..{n - 1}")

    def __str__(self):
        return "{" + ",".join(map(str, sorted(self.left))) + "} | {" + ",".join(
            map(str, sorted(self.right))
        ) + "}"


@dataclass(frozen=True)
class DistanceViolation:
    u: int
    v: int
    got: int
    want: int


@dataclass(frozen=True)
class CoverageViolation:
    u: int
    v: int
    covered: int
    required: int


def address_distance(row_u: Sequence[Symbol], row_v: Sequence[Symbol]) -> int:
    if len(row_u) != len(row_v):
        raise AddressingError(f"Address lengths differ: {len(row_u)} != {len(row_v)}")
    return sum(
        1
        for x, y in zip(row_u, row_v)
        if (x is Symbol.A and y is Symbol.B) or (x is Symbol.B and y is Symbol.A)
    )


def verify_addressing(graph: Graph, addressing: Addressing) -> Optional[DistanceViolation]:
    """None when every pair's address distance equals its graph distance"""
    if addressing.n != graph.n:
        raise AddressingError(f"Addressing has {addressing.n} rows for {graph.n} vertices")
    distances = all_pairs_distances(graph)
    for u in range(graph.n):
        for v in range(u + 1, graph.n):
            got = address_distance(addressing.cells[u], addressing.cells[v])
            want = distances[u, v]
            if got != want:
                return DistanceViolation(u, v, got, want)
    return None


def addressing_to_bicliques(addressing: Addressing) -> List[Biclique]:
    """Columns without both an a and a b encode no distance and are dropped"""
    parts = []
    for column in addressing.columns():
        left = [v for v, s in enumerate(column) if s is Symbol.A]
        right = [v for v, s in enumerate(column) if s is Symbol.B]
        if left and right:
            parts.append(Biclique.of(left, right))
    return parts


def bicliques_to_addressing(n: int, parts: Sequence[Biclique]) -> Addressing:
    columns = []
    for part in parts:
        part.check_bounds(n)
        columns.append(
            [
                Symbol.A if v in part.left else Symbol.B if v in part.right else Symbol.ZERO
                for v in range(n)
            ]
        )
    return Addressing.from_columns(n, columns)


def coverage_matrix(n: int, parts: Sequence[Biclique]) -> List[List[int]]:
    covered = [[0] * n for _ in range(n)]
    for part in parts:
        part.check_bounds(n)
        for u in part.left:
            for v in part.right:
                covered[u][v] += 1
                covered[v][u] += 1
    return covered


def verify_biclique_partition(
    multigraph: Multigraph, parts: Sequence[Biclique]
) -> Optional[CoverageViolation]:
    """None when each pair lies across exactly mult[u][v] of the bicliques"""
    covered = coverage_matrix(multigraph.n, parts)
    for u in range(multigraph.n):
        for v in range(u + 1, multigraph.n):
            if covered[u][v] != multigraph.mult[u][v]:
                return CoverageViolation(u, v, covered[u][v], multigraph.mult[u][v])
    return None


def addressing_matrix_split(
    addressing: Addressing,
) -> Tuple[Tuple[Tuple[int, ...], ...], Tuple[Tuple[int, ...], ...]]:
    """M(a, b) = aX + bY: X marks the a-cells, Y the b-cells"""
    x = tuple(tuple(int(s is Symbol.A) for s in row) for row in addressing.cells)
    y = tuple(tuple(int(s is Symbol.B) for s in row) for row in addressing.cells)
    return x, y
