from graph_addressing.linalg.matrix import (
    Inertia,
    IntSymMatrix,
    MatrixError,
    congruent,
    diamond,
    diamond_inertia_predict,
    diamond_vector,
    eigenvalue_multiplicity,
    inertia,
    kron,
    row_sum_regular,
)
from graph_addressing.linalg.spectra import SpectrumError, SpectrumTable

__all__ = [
    "Inertia",
    "IntSymMatrix",
    "MatrixError",
    "SpectrumError",
    "SpectrumTable",
    "congruent",
    "diamond",
    "diamond_inertia_predict",
    "diamond_vector",
    "eigenvalue_multiplicity",
    "inertia",
    "kron",
    "row_sum_regular",
]
