from graph_addressing.addressing.constructions import (
    complete_addressing,
    concat_addressing,
    constructive_addressing,
    hamming_addressing,
    known_partition,
    tree_addressing,
)
from graph_addressing.addressing.core import (
    Addressing,
    AddressingError,
    Biclique,
    BicliqueError,
    CoverageViolation,
    DistanceViolation,
    Symbol,
    address_distance,
    addressing_matrix_split,
    addressing_to_bicliques,
    bicliques_to_addressing,
    coverage_matrix,
    verify_addressing,
    verify_biclique_partition,
)
from graph_addressing.addressing.eigensharp import (
    EigensharpReport,
    eigensharp_necessary_check,
    triangular_null_vector,
    triangular_null_vectors,
)
from graph_addressing.addressing.io import (
    format_addressing,
    format_bicliques,
    parse_addressing,
    parse_bicliques,
)

__all__ = [
    "Addressing",
    "AddressingError",
    "Biclique",
    "BicliqueError",
    "CoverageViolation",
    "DistanceViolation",
    "EigensharpReport",
    "Symbol",
    "address_distance",
    "addressing_matrix_split",
    "addressing_to_bicliques",
    "bicliques_to_addressing",
    "complete_addressing",
    "concat_addressing",
    "constructive_addressing",
    "coverage_matrix",
    "eigensharp_necessary_check",
    "format_addressing",
    "format_bicliques",
    "hamming_addressing",
    "known_partition",
    "parse_addressing",
    "parse_bicliques",
    "tree_addressing",
    "triangular_null_vector",
    "triangular_null_vectors",
    "verify_addressing",
    "verify_biclique_partition",
]
