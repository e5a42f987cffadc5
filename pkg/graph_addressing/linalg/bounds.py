"""
Lower and upper bounds on the addressing length N(G) = bp(D(G)).
"""
import logging
from dataclasses import dataclass
from math import isqrt
from typing import List, Optional, Sequence, Tuple

from graph_addressing.graphs.core import Graph, Multigraph, diameter
from graph_addressing.linalg.matrix import (
    Inertia,
    IntSymMatrix,
    diamond_inertia_predict,
    inertia,
)

logger = logging.getLogger(__name__)


def witsenhausen_bound(multigraph: Multigraph) -> int:
    """max(n_plus, n_minus) of the multiplicity matrix, a lower bound on bp"""
    return inertia(multigraph.as_matrix()).witsenhausen


@dataclass(frozen=True)
class HoffmanZaksBounds:
    m: int
    lower: int
    upper: int

    @property
    def conflict(self) -> bool:
        return self.lower > self.upper


def hoffman_zaks_bounds(m: int) -> Tuple[int, int]:
    """
    Hoffman's lower and Zaks' upper bound for N(K_{2,...,2}) with m classes.
    The formulas come without a stated validity range; at m = 2 the lower
    bound (3) exceeds the true value bp(D(C_4)) = 2.
    """
    if m < 2:
        raise ValueError(f"Hoffman-Zaks bounds need m >= 2, got {m}")
    lower = m + isqrt(2 * m) - 1
    upper = 3 * m // 2 - 1 if m % 2 == 0 else (3 * m - 1) // 2
    if lower > upper:
        logger.warning(
            f"Hoffman-Zaks bounds conflict at m={m}: lower {lower} > upper {upper}"
        )
    return lower, upper


def hoffman_zaks(m: int) -> HoffmanZaksBounds:
    lower, upper = hoffman_zaks_bounds(m)
    return HoffmanZaksBounds(m, lower, upper)


def winkler_upper(graph: Graph) -> int:
    return graph.n - 1


def graham_pollak_upper(graph: Graph) -> int:
    return diameter(graph) * (graph.n - 1)


def triangular_lower(n: int) -> int:
    """T_n has no eigensharp addressing for n >= 4, which lifts the spectral n - 1 to n"""
    if n < 4:
        raise ValueError(f"Triangular bound needs n >= 4, got {n}")
    return n


def regular_distance_row_sum(adjacency: IntSymMatrix, n: int) -> Optional[int]:
    """Row sum 2(n-1) - k of D = 2(J - I) - A when A is k-regular, else None"""
    degrees = set(adjacency.row_sums())
    if len(degrees) != 1:
        return None
    return 2 * (n - 1) - degrees.pop()


@dataclass(frozen=True)
class ProductInertiaBounds:
    minus_lower: int
    plus_lower: int
    predicted: Inertia


def product_inertia_bounds(
    factor_inertias: Sequence[Inertia], factor_orders: Sequence[int]
) -> ProductInertiaBounds:
    """
    For regular factor distance matrices: n_minus(D(G)) >= sum n_minus(D(G_i))
    and n_plus(D(G)) >= 1 + sum(n_plus(D(G_i)) - 1); the folded diamond
    prediction makes both equalities.
    """
    if not factor_inertias or len(factor_inertias) != len(factor_orders):
        raise ValueError("Need one inertia per factor order")
    predicted = factor_inertias[0]
    order = factor_orders[0]
    for other, other_order in zip(factor_inertias[1:], factor_orders[1:]):
        predicted = diamond_inertia_predict(predicted, other, order, other_order)
        order *= other_order
    return ProductInertiaBounds(
        minus_lower=sum(i.n_minus for i in factor_inertias),
        plus_lower=1 + sum(i.n_plus - 1 for i in factor_inertias),
        predicted=predicted,
    )


def product_upper(factor_uppers: Sequence[int]) -> int:
    return sum(factor_uppers)


def subadditivity_chain(factor_orders: Sequence[int]) -> List[int]:
    """[sum(n_i) - k, prod(n_i) - 1]: the trivial sum bound never beats Winkler's n - 1"""
    total = 1
    for n in factor_orders:
        total *= n
    return [sum(factor_orders) - len(factor_orders), total - 1]
