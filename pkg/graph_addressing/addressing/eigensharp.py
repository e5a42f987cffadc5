"""
Necessary conditions for an eigensharp addressing and the T_n null vectors
that make triangular graphs fail them.

An eigensharp addressing matrix M(a, b) = aX + bY has every column orthogonal
to the null space of D(G), and both X and Y have linearly independent
columns. Failing any of these while having length equal to the spectral
bound is an inconsistency.
"""
import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from graph_addressing.addressing.core import (
    Addressing,
    AddressingError,
    addressing_matrix_split,
    verify_addressing,
)
from graph_addressing.graphs.core import Graph, all_pairs_distances
from graph_addressing.linalg.exact import IntVector, column_null_space, dot, null_space
from graph_addressing.linalg.matrix import inertia

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NullWitness:
    null_vector: IntVector
    column: int
    matrix: str  # "X" or "Y"
    product: int


@dataclass
class EigensharpReport:
    length: int
    spectral_bound: int
    cols_X_independent: bool
    cols_Y_independent: bool
    null_orthogonal: bool
    witnesses: Dict[str, object] = field(default_factory=dict)

    @property
    def conditions_hold(self) -> bool:
        return self.cols_X_independent and self.cols_Y_independent and self.null_orthogonal

    @property
    def inconsistent(self) -> bool:
        """Claimed eigensharp by length, but a necessary condition fails"""
        return self.length == self.spectral_bound and not self.conditions_hold


def _columns(matrix: Sequence[Sequence[int]], t: int) -> List[Tuple[int, ...]]:
    return [tuple(row[j] for row in matrix) for j in range(t)]


def eigensharp_necessary_check(graph: Graph, addressing: Addressing) -> EigensharpReport:
    violation = verify_addressing(graph, addressing)
    if violation is not None:
        raise AddressingError(f"Not an addressing of {graph}: {violation}")
    distances = all_pairs_distances(graph)
    x, y = addressing_matrix_split(addressing)
    x_columns = _columns(x, addressing.t)
    y_columns = _columns(y, addressing.t)
    witnesses: Dict[str, object] = {}

    x_dependencies = column_null_space(x_columns)
    if x_dependencies:
        witnesses["X"] = x_dependencies[0]
    y_dependencies = column_null_space(y_columns)
    if y_dependencies:
        witnesses["Y"] = y_dependencies[0]

    null_witness = _first_non_orthogonal(null_space(distances), x_columns, y_columns)
    if null_witness is not None:
        witnesses["null"] = null_witness

    report = EigensharpReport(
        length=addressing.t,
        spectral_bound=inertia(distances).witsenhausen,
        cols_X_independent=not x_dependencies,
        cols_Y_independent=not y_dependencies,
        null_orthogonal=null_witness is None,
        witnesses=witnesses,
    )
    if report.inconsistent:
        logger.warning(f"Addressing of {graph} has spectral length but fails {sorted(witnesses)}")
    return report


def _first_non_orthogonal(
    basis: List[IntVector], x_columns, y_columns
) -> Optional[NullWitness]:
    # M(a, b) columns are orthogonal for every a, b iff the X and Y columns are
    for vector in basis:
        for name, columns in (("X", x_columns), ("Y", y_columns)):
            for j, column in enumerate(columns):
                value = dot(vector, column)
                if value != 0:
                    return NullWitness(vector, j, name, value)
    return None


def triangular_null_vector(
    n: int, pair1: Tuple[int, int], pair2: Tuple[int, int]
) -> Tuple[int, ...]:
    """
    Null vector of D(T_n) supported on the T_4 spanned by pair1 ∪ pair2.

    pair1 = {a, b} and pair2 = {c, d} are labelled 0; the 4-cycle
    ac - ad - bd - bc - ac is labelled +1, -1, +1, -1; every vertex outside
    the T_4 gets 0. Coordinates follow the lexicographic order of 2-subsets
    used by ``gen_triangular``.
    """
    if n < 4:
        raise AddressingError(f"Triangular graph needs n >= 4, got {n}")
    first, second = frozenset(pair1), frozenset(pair2)
    if len(first) != 2 or len(second) != 2:
        raise AddressingError("Both pairs must be 2-subsets")
    if first & second:
        raise AddressingError(f"Pairs {sorted(first)} and {sorted(second)} are not disjoint")
    if any(not 0 <= v < n for v in first | second):
        raise AddressingError(f"Pair elements must lie in 0..{n - 1}")
    a, b = sorted(first)
    c, d = sorted(second)
    labels = {
        frozenset((a, c)): 1,
        frozenset((a, d)): -1,
        frozenset((b, d)): 1,
        frozenset((b, c)): -1,
    }
    return tuple(labels.get(frozenset(p), 0) for p in combinations(range(n), 2))


def triangular_null_vectors(n: int, support: Sequence[int] = (0, 1, 2, 3)) -> List[Tuple[int, ...]]:
    """All labellings of the T_4 on ``support`` (three ways to split it into two pairs)"""
    a, b, c, d = support
    return [
        triangular_null_vector(n, (a, b), (c, d)),
        triangular_null_vector(n, (a, c), (b, d)),
        triangular_null_vector(n, (a, d), (b, c)),
    ]
