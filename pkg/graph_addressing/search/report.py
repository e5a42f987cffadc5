"""
Everything known about N(G) for one graph: spectral and structural lower
bounds, constructive and published upper bounds, and the exact search.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional

from graph_addressing.addressing.constructions import constructive_addressing, known_partition
from graph_addressing.addressing.core import (
    AddressingError,
    addressing_to_bicliques,
    verify_addressing,
)
from graph_addressing.config import ToolkitConfig
from graph_addressing.graphs.core import Graph, Multigraph, all_pairs_distances
from graph_addressing.linalg.bounds import (
    HoffmanZaksBounds,
    ProductInertiaBounds,
    graham_pollak_upper,
    hoffman_zaks,
    product_inertia_bounds,
    product_upper,
    triangular_lower,
    winkler_upper,
)
from graph_addressing.linalg.matrix import Inertia, inertia, row_sum_regular
from graph_addressing.search.solver import SearchResult, SearchStatus, min_biclique_partition

logger = logging.getLogger(__name__)


@dataclass
class ProductSandwich:
    """Spectral bound of the product against the sum of what is known for the factors"""

    factor_lowers: List[int]
    factor_uppers: List[int]
    product_lower: int
    product_upper: int
    inertia_bounds: Optional[ProductInertiaBounds] = None


@dataclass
class BpReport:
    graph: str
    n: int
    inertia: Inertia
    spectral_lower: int
    improved_lower: Optional[int]
    constructive_upper: Optional[int]
    constructive_eigensharp: Optional[bool]
    known_upper: Optional[int]
    winkler_upper: int
    graham_pollak_upper: int
    hoffman_zaks: Optional[HoffmanZaksBounds]
    product: Optional[ProductSandwich]
    search: SearchResult

    @property
    def lower(self) -> int:
        return max(
            self.spectral_lower, self.improved_lower or 0, self.search.proven_lower
        )

    @property
    def upper(self) -> int:
        candidates = [self.winkler_upper, self.graham_pollak_upper, self.search.best_size]
        candidates += [u for u in (self.constructive_upper, self.known_upper) if u is not None]
        if self.product is not None:
            candidates.append(self.product.product_upper)
        return min(candidates)

    @property
    def settled(self) -> bool:
        return self.lower == self.upper


def _improved_lower(graph: Graph) -> Optional[int]:
    family = graph.family
    if family is not None and family.kind == "triangular" and family.params[0] >= 4:
        return triangular_lower(family.params[0])
    return None


def _hoffman_zaks(graph: Graph) -> Optional[HoffmanZaksBounds]:
    family = graph.family
    if family is not None and family.kind == "multipartite" and len(family.params) >= 2:
        if all(size == 2 for size in family.params):
            return hoffman_zaks(len(family.params))
    return None


def _best_upper(graph: Graph) -> int:
    addressing = constructive_addressing(graph)
    return addressing.t if addressing is not None else winkler_upper(graph)


def _product_sandwich(graph: Graph, workers: int) -> Optional[ProductSandwich]:
    family = graph.family
    if family is None or family.kind != "product":
        return None
    factor_distances = [all_pairs_distances(f, workers) for f in family.factors]
    factor_inertias = [inertia(d) for d in factor_distances]
    regular = all(row_sum_regular(d) is not None for d in factor_distances)
    factor_uppers = [_best_upper(f) for f in family.factors]
    return ProductSandwich(
        factor_lowers=[i.witsenhausen for i in factor_inertias],
        factor_uppers=factor_uppers,
        product_lower=inertia(all_pairs_distances(graph, workers)).witsenhausen,
        product_upper=product_upper(factor_uppers),
        inertia_bounds=(
            product_inertia_bounds(factor_inertias, [f.n for f in family.factors])
            if regular
            else None
        ),
    )


def bp_report(graph: Graph, config: Optional[ToolkitConfig] = None) -> BpReport:
    config = config or ToolkitConfig()
    distances = all_pairs_distances(graph, config.workers)
    multigraph = Multigraph.from_matrix(distances)
    distance_inertia = inertia(distances)
    spectral = distance_inertia.witsenhausen

    seeds = []
    addressing = constructive_addressing(graph)
    constructive_upper = None
    constructive_eigensharp = None
    if addressing is not None:
        violation = verify_addressing(graph, addressing)
        if violation is not None:
            raise AddressingError(f"Construction for {graph} does not verify: {violation}")
        constructive_upper = addressing.t
        constructive_eigensharp = addressing.t == spectral
        seeds.append(addressing_to_bicliques(addressing))
    known = known_partition(graph)
    if known is not None:
        seeds.append(known)

    improved = _improved_lower(graph)
    if graph.n > config.max_search_vertices:
        logger.warning(
            f"{graph} has {graph.n} vertices, above max_search_vertices="
            f"{config.max_search_vertices}: skipping the exact search"
        )
        best = min(seeds, key=len) if seeds else None
        search = SearchResult(
            status=SearchStatus.LOWER_BOUND_ONLY,
            best_size=len(best) if best is not None else winkler_upper(graph),
            certificate=best,
            proven_lower=max(spectral, improved or 0),
        )
    else:
        search = min_biclique_partition(multigraph, config.search, seeds)

    return BpReport(
        graph=str(graph),
        n=graph.n,
        inertia=distance_inertia,
        spectral_lower=spectral,
        improved_lower=improved,
        constructive_upper=constructive_upper,
        constructive_eigensharp=constructive_eigensharp,
        known_upper=len(known) if known is not None else None,
        winkler_upper=winkler_upper(graph),
        graham_pollak_upper=graham_pollak_upper(graph),
        hoffman_zaks=_hoffman_zaks(graph),
        product=_product_sandwich(graph, config.workers),
        search=search,
    )
