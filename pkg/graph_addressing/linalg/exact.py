"""
Exact rational null spaces and ranks, backed by sympy.
"""
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import List, Sequence, Tuple

from sympy import Matrix, Rational

from graph_addressing.linalg.matrix import IntSymMatrix

IntVector = Tuple[int, ...]


def integer_scaled(vector: Sequence) -> IntVector:
    """Scale a rational vector to integers with gcd 1 and a positive leading entry"""
    fractions = [Fraction(int(Rational(x).p), int(Rational(x).q)) for x in vector]
    common = reduce(lcm, (f.denominator for f in fractions), 1)
    integers = [int(f * common) for f in fractions]
    divisor = reduce(gcd, (abs(x) for x in integers), 0)
    if divisor == 0:
        return tuple(integers)
    integers = [x // divisor for x in integers]
    leading = next(x for x in integers if x != 0)
    if leading < 0:
        integers = [-x for x in integers]
    return tuple(integers)


def null_space(matrix: IntSymMatrix) -> List[IntVector]:
    basis = Matrix(matrix.rows).nullspace()
    return [integer_scaled(list(v)) for v in basis]


def column_null_space(columns: Sequence[Sequence[int]]) -> List[IntVector]:
    """Dependencies among the given columns: vectors c with sum_j c_j * col_j = 0"""
    if not columns:
        return []
    as_matrix = Matrix([list(col) for col in columns]).T
    return [integer_scaled(list(v)) for v in as_matrix.nullspace()]


def rank(vectors: Sequence[Sequence[int]]) -> int:
    if not vectors:
        return 0
    return Matrix([list(v) for v in vectors]).rank()


def dot(x: Sequence[int], y: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(x, y))
