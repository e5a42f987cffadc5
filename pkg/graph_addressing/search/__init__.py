from graph_addressing.search.report import BpReport, ProductSandwich, bp_report
from graph_addressing.search.solver import (
    BicliquePartitionSearch,
    SearchBudgetExhausted,
    SearchError,
    SearchResult,
    SearchStatus,
    greedy_upper,
    min_biclique_partition,
)

__all__ = [
    "BicliquePartitionSearch",
    "BpReport",
    "ProductSandwich",
    "SearchBudgetExhausted",
    "SearchError",
    "SearchResult",
    "SearchStatus",
    "bp_report",
    "greedy_upper",
    "min_biclique_partition",
]
