"""
Exact symmetric integer matrices and their inertia.

Nothing here touches floating point. Inertia is computed with a
fraction-free symmetric congruence reduction: every step is an exact
rational congruence, scaled so that all intermediate entries stay integers.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from graph_addressing.constants import DEFAULT_MAX_VERTICES

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]


class MatrixError(Exception):
    ...


@dataclass(frozen=True)
class Inertia:
    n_plus: int
    n_zero: int
    n_minus: int

    def __post_init__(self):
        if min(self.n_plus, self.n_zero, self.n_minus) < 0:
            raise MatrixError(f"Negative inertia component in {self}")

    @property
    def order(self) -> int:
        return self.n_plus + self.n_zero + self.n_minus

    @property
    def witsenhausen(self) -> int:
        return max(self.n_plus, self.n_minus)

    def swapped(self) -> "Inertia":
        return Inertia(self.n_minus, self.n_zero, self.n_plus)

    def as_tuple(self) -> Tuple[int, int, int]:
        return self.n_plus, self.n_zero, self.n_minus

    def __str__(self):
        return f"({self.n_plus}, {self.n_zero}, {self.n_minus})"


@dataclass(frozen=True)
class IntSymMatrix:
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        for i, row in enumerate(self.rows):
            if len(row) != n:
                raise MatrixError(f"Row {i} has length {len(row)}, expected {n}")
        for i in range(n):
            for j in range(i + 1, n):
                if self.rows[i][j] != self.rows[j][i]:
                    raise MatrixError(
                        f"Matrix is not symmetric at ({i}, {j}): "
                        f"{self.rows[i][j]} != {self.rows[j][i]}"
                    )

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "IntSymMatrix":
        converted = []
        for row in rows:
            converted_row = []
            for x in row:
                if isinstance(x, Fraction):
                    if x.denominator != 1:
                        raise MatrixError(f"Non-integer entry {x}")
                    x = x.numerator
                converted_row.append(int(x))
            converted.append(tuple(converted_row))
        return cls(tuple(converted))

    @classmethod
    def zeros(cls, n: int) -> "IntSymMatrix":
        return cls(tuple((0,) * n for _ in range(n)))

    @classmethod
    def identity(cls, n: int) -> "IntSymMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def ones(cls, n: int) -> "IntSymMatrix":
        return cls(tuple((1,) * n for _ in range(n)))

    @property
    def order(self) -> int:
        return len(self.rows)

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.rows[i][j]

    def __add__(self, other: "IntSymMatrix") -> "IntSymMatrix":
        self._check_same_order(other)
        return IntSymMatrix(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            )
        )

    def __sub__(self, other: "IntSymMatrix") -> "IntSymMatrix":
        return self + (-other)

    def __neg__(self) -> "IntSymMatrix":
        return self.scaled(-1)

    def scaled(self, factor: int) -> "IntSymMatrix":
        return IntSymMatrix(tuple(tuple(factor * x for x in row) for row in self.rows))

    def shifted(self, eigenvalue: Rational) -> "IntSymMatrix":
        """Integer matrix q*M - p*I, congruent in sign pattern to M - (p/q)I"""
        value = Fraction(eigenvalue)
        p, q = value.numerator, value.denominator
        return IntSymMatrix(
            tuple(
                tuple(q * x - (p if i == j else 0) for j, x in enumerate(row))
                for i, row in enumerate(self.rows)
            )
        )

    def row_sums(self) -> List[int]:
        return [sum(row) for row in self.rows]

    def matvec(self, vector: Sequence[Rational]) -> List[Rational]:
        if len(vector) != self.order:
            raise MatrixError(
                f"Vector of length {len(vector)} for matrix of order {self.order}"
            )
        return [sum(a * x for a, x in zip(row, vector)) for row in self.rows]

    def is_hollow(self) -> bool:
        return all(self.rows[i][i] == 0 for i in range(self.order))

    def format(self) -> str:
        lines = [str(self.order)]
        lines.extend(" ".join(str(x) for x in row) for row in self.rows)
        return "\n".join(lines)

    def _check_same_order(self, other: "IntSymMatrix"):
        if self.order != other.order:
            raise MatrixError(f"Order mismatch: {self.order} != {other.order}")


def parse_matrix(text: str) -> IntSymMatrix:
    tokens = text.split()
    if not tokens:
        raise MatrixError("Empty matrix text")
    n = int(tokens[0])
    values = [int(t) for t in tokens[1:]]
    if len(values) != n * n:
        raise MatrixError(f"Expected {n * n} entries, got {len(values)}")
    return IntSymMatrix.from_rows(values[i * n : (i + 1) * n] for i in range(n))


def inertia(matrix: IntSymMatrix) -> Inertia:
    """
    Signature (n_plus, n_zero, n_minus) by symmetric congruence elimination.

    Pivots on the first nonzero diagonal entry of the active block. When the
    whole active diagonal is zero but an off-diagonal entry a[i][j] is not,
    row/column j is added into row/column i, which makes a[i][i] = 2*a[i][j].
    Entries are kept integral Bareiss-style: the active block always equals
    the previous pivot times the true Schur complement, so each step divides
    exactly and the sign of the k-th diagonal factor is sign(p_k * p_{k-1}).
    """
    a = [list(row) for row in matrix.rows]
    n = len(a)
    active = list(range(n))
    previous = 1
    plus = minus = 0
    while active:
        pivot_index = next((k for k in active if a[k][k] != 0), None)
        if pivot_index is None:
            pivot_index = _make_diagonal_pivot(a, active)
            if pivot_index is None:
                break
        pivot = a[pivot_index][pivot_index]
        if (pivot > 0) == (previous > 0):
            plus += 1
        else:
            minus += 1
        active.remove(pivot_index)
        pivot_row = a[pivot_index]
        for position, i in enumerate(active):
            row_i = a[i]
            aik = row_i[pivot_index]
            for j in active[position:]:
                value = (pivot * row_i[j] - aik * pivot_row[j]) // previous
                row_i[j] = value
                a[j][i] = value
        previous = pivot
    return Inertia(plus, n - plus - minus, minus)


def _make_diagonal_pivot(a: List[List[int]], active: List[int]) -> Optional[int]:
    for position, i in enumerate(active):
        for j in active[position + 1 :]:
            if a[i][j] != 0:
                for t in active:
                    a[i][t] += a[j][t]
                for t in active:
                    a[t][i] += a[t][j]
                return i
    return None


def eigenvalue_multiplicity(matrix: IntSymMatrix, eigenvalue: Rational) -> int:
    return inertia(matrix.shifted(eigenvalue)).n_zero


def row_sum_regular(matrix: IntSymMatrix) -> Optional[Fraction]:
    sums = set(matrix.row_sums())
    if len(sums) != 1:
        return None
    return Fraction(sums.pop())


def congruent(matrix: IntSymMatrix, transform: Sequence[Sequence[int]]) -> IntSymMatrix:
    """P^T M P for a square integer matrix P"""
    n = matrix.order
    if len(transform) != n or any(len(row) != n for row in transform):
        raise MatrixError(f"Transform must be {n}x{n}")
    mp = [
        [sum(matrix.rows[i][k] * transform[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]
    return IntSymMatrix.from_rows(
        [sum(transform[k][i] * mp[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    )


def kron(
    a: IntSymMatrix, b: IntSymMatrix, max_order: int = DEFAULT_MAX_VERTICES
) -> IntSymMatrix:
    n, m = a.order, b.order
    _check_product_order(n, m, max_order)
    return IntSymMatrix(
        tuple(
            tuple(a.rows[i][k] * b.rows[j][t] for k in range(n) for t in range(m))
            for i in range(n)
            for j in range(m)
        )
    )


def diamond(
    a: IntSymMatrix, b: IntSymMatrix, max_order: int = DEFAULT_MAX_VERTICES
) -> IntSymMatrix:
    """Additive Kronecker product: block (i, k) is a[i][k] + B"""
    n, m = a.order, b.order
    _check_product_order(n, m, max_order)
    return IntSymMatrix(
        tuple(
            tuple(a.rows[i][k] + b.rows[j][t] for k in range(n) for t in range(m))
            for i in range(n)
            for j in range(m)
        )
    )


def diamond_vector(x: Sequence[Rational], y: Sequence[Rational]) -> List[Rational]:
    return [xi + yj for xi in x for yj in y]


def diamond_inertia_predict(
    inertia_a: Inertia, inertia_b: Inertia, order_a: int, order_b: int
) -> Inertia:
    """
    Inertia of A◇B for symmetric regular A, B with positive row sums.
    The caller is responsible for those hypotheses.
    """
    return Inertia(
        n_plus=inertia_a.n_plus + inertia_b.n_plus - 1,
        n_zero=order_a * order_b
        - order_a
        - order_b
        + 1
        + inertia_a.n_zero
        + inertia_b.n_zero,
        n_minus=inertia_a.n_minus + inertia_b.n_minus,
    )


def _check_product_order(n: int, m: int, max_order: int):
    if n * m > max_order:
        raise MatrixError(
            f"Product order {n}*{m}={n * m} exceeds the configured cap {max_order}"
        )


def random_symmetric(rng: Random, n: int, low: int = -3, high: int = 3) -> IntSymMatrix:
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            a[i][j] = a[j][i] = rng.randint(low, high)
    return IntSymMatrix.from_rows(a)


def random_regular_symmetric(rng: Random, n: int, low: int = -3, high: int = 3) -> IntSymMatrix:
    """Random symmetric matrix whose rows all sum to the same positive integer"""
    a = [list(row) for row in random_symmetric(rng, n, low, high).rows]
    sums = [sum(row) for row in a]
    target = max(max(sums), 0) + rng.randint(1, high + 1)
    for i in range(n):
        a[i][i] += target - sums[i]
    return IntSymMatrix.from_rows(a)
