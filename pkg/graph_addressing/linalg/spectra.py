"""
Closed-form spectra of the graph families the toolkit knows about.

Every table is exact: eigenvalues are Fractions, multiplicities ints. A table
can be checked against a concrete matrix with inertia probes only, see
``SpectrumTable.mismatches``.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt
from typing import Dict, List, Tuple

from graph_addressing.linalg.matrix import (
    Inertia,
    IntSymMatrix,
    Rational,
    eigenvalue_multiplicity,
    inertia,
)

logger = logging.getLogger(__name__)


class SpectrumError(Exception):
    ...


@dataclass(frozen=True)
class SpectrumTable:
    entries: Tuple[Tuple[Fraction, int], ...]

    def __post_init__(self):
        eigenvalues = [value for value, _ in self.entries]
        if len(set(eigenvalues)) != len(eigenvalues):
            raise SpectrumError(f"Repeated eigenvalue in {eigenvalues}")
        if any(mult <= 0 for _, mult in self.entries):
            raise SpectrumError("Multiplicities must be positive")

    @classmethod
    def build(cls, pairs) -> "SpectrumTable":
        """Merge repeated eigenvalues and drop empty multiplicities, keeping first-seen order"""
        merged: Dict[Fraction, int] = {}
        for value, mult in pairs:
            if mult < 0:
                raise SpectrumError(f"Negative multiplicity {mult} for {value}")
            value = Fraction(value)
            merged[value] = merged.get(value, 0) + mult
        return cls(tuple((v, m) for v, m in merged.items() if m > 0))

    @property
    def order(self) -> int:
        return sum(mult for _, mult in self.entries)

    def multiplicity(self, eigenvalue: Rational) -> int:
        target = Fraction(eigenvalue)
        return next((m for v, m in self.entries if v == target), 0)

    def as_dict(self) -> Dict[Fraction, int]:
        return dict(self.entries)

    def inertia(self) -> Inertia:
        return Inertia(
            n_plus=sum(m for v, m in self.entries if v > 0),
            n_zero=sum(m for v, m in self.entries if v == 0),
            n_minus=sum(m for v, m in self.entries if v < 0),
        )

    def mismatches(self, matrix: IntSymMatrix) -> List[str]:
        """Differences between this table and an explicit matrix, empty when they agree"""
        problems = []
        if matrix.order != self.order:
            return [f"order {matrix.order} != table order {self.order}"]
        actual = inertia(matrix)
        if actual != self.inertia():
            problems.append(f"inertia {actual} != table inertia {self.inertia()}")
        for value, mult in self.entries:
            probed = eigenvalue_multiplicity(matrix, value)
            if probed != mult:
                problems.append(f"eigenvalue {value}: probe {probed} != table {mult}")
        return problems

    def format(self) -> str:
        return "\n".join(f"{value} {mult}" for value, mult in self.entries)

    def __str__(self):
        return "{" + ", ".join(f"{v}^{m}" for v, m in self.entries) + "}"


def krawtchouk_eigenvalue(k: int, x: int, n: int, q: int) -> int:
    """Eigenvalue of the distance-k matrix of H(n, q) on the x-th eigenspace"""
    if not (0 <= k <= n and 0 <= x <= n):
        raise SpectrumError(f"Need 0 <= k, x <= n, got k={k}, x={x}, n={n}")
    return sum(
        (-q) ** i * (q - 1) ** (k - i) * comb(n - i, k - i) * comb(x, i)
        for i in range(k + 1)
    )


def hamming_perron(n: int, q: int) -> int:
    return n * q ** (n - 1) * (q - 1)


def hamming_distance_eigenvalue(x: int, n: int, q: int) -> int:
    """sum_k k * lambda_{k,x}: the eigenvalue of D(H(n, q)) on the x-th eigenspace"""
    return sum(k * krawtchouk_eigenvalue(k, x, n, q) for k in range(1, n + 1))


def hamming_distance_spectrum(n: int, q: int) -> SpectrumTable:
    _check_hamming(n, q)
    zero_mult = q**n - 1 - n * (q - 1)
    return SpectrumTable.build(
        [
            (hamming_perron(n, q), 1),
            (-(q ** (n - 1)), n * (q - 1)),
            (0, zero_mult),
        ]
    )


def krawtchouk_distance_spectrum(n: int, q: int) -> SpectrumTable:
    _check_hamming(n, q)
    return SpectrumTable.build(
        (hamming_distance_eigenvalue(x, n, q), comb(n, x) * (q - 1) ** x)
        for x in range(n + 1)
    )


def triangular_parameters(n: int) -> Tuple[int, int, int, int]:
    _check_triangular(n)
    return comb(n, 2), 2 * (n - 2), n - 2, 4


def triangular_adjacency_spectrum(n: int) -> SpectrumTable:
    _check_triangular(n)
    return SpectrumTable.build(
        [(2 * (n - 2), 1), (n - 4, n - 1), (-2, comb(n, 2) - n)]
    )


def triangular_distance_spectrum(n: int) -> SpectrumTable:
    _check_triangular(n)
    return SpectrumTable.build(
        [((n - 1) * (n - 2), 1), (2 - n, n - 1), (0, comb(n, 2) - n)]
    )


def johnson_s(n: int, m: int) -> int:
    return sum(j * comb(m, j) * comb(n - m, j) for j in range(1, m + 1))


def johnson_distance_spectrum(n: int, m: int) -> SpectrumTable:
    if not n >= m >= 2:
        raise SpectrumError(f"Johnson graph needs n >= m >= 2, got n={n}, m={m}")
    if m == n:
        # J(n, n) is a single vertex
        return SpectrumTable.build([(0, 1)])
    s = johnson_s(n, m)
    return SpectrumTable.build(
        [(s, 1), (0, comb(n, m) - n), (Fraction(-s, n - 1), n - 1)]
    )


def srg_adjacency_spectrum(v: int, k: int, lam: int, mu: int) -> SpectrumTable:
    """Adjacency spectrum of a connected strongly regular graph with rational eigenvalues"""
    delta = (lam - mu) ** 2 + 4 * (k - mu)
    root = isqrt(delta)
    if root * root != delta:
        raise SpectrumError(
            f"srg({v},{k},{lam},{mu}) has irrational eigenvalues (discriminant {delta})"
        )
    r = Fraction(lam - mu + root, 2)
    s = Fraction(lam - mu - root, 2)
    skew = Fraction(2 * k + (v - 1) * (lam - mu), root)
    f = (v - 1 - skew) / 2
    g = (v - 1 + skew) / 2
    if f.denominator != 1 or g.denominator != 1:
        raise SpectrumError(f"Non-integral multiplicities for srg({v},{k},{lam},{mu})")
    return SpectrumTable.build([(k, 1), (r, int(f)), (s, int(g))])


def srg_distance_spectrum(v: int, k: int, lam: int, mu: int) -> SpectrumTable:
    """Diameter-2 case: D = 2(J - I) - A, so theta maps to -2 - theta off the all-ones vector"""
    if mu == 0:
        raise SpectrumError("A strongly regular graph with mu = 0 is disconnected")
    adjacency = srg_adjacency_spectrum(v, k, lam, mu)
    pairs = [(2 * (v - 1) - k, 1)]
    for value, mult in adjacency.entries[1:]:
        pairs.append((-2 - value, mult))
    return SpectrumTable.build(pairs)


def _check_hamming(n: int, q: int):
    if n < 1 or q < 2:
        raise SpectrumError(f"Hamming graph needs n >= 1 and q >= 2, got n={n}, q={q}")


def _check_triangular(n: int):
    if n < 4:
        raise SpectrumError(f"Triangular graph needs n >= 4, got {n}")
