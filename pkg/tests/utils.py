import os
from contextlib import contextmanager
from random import Random
from typing import List

from graph_addressing.addressing.core import Addressing, Symbol
from graph_addressing.config import ToolkitConfig

test_config = ToolkitConfig.model_validate(
    {
        "max_vertices": 500,
        "max_search_vertices": 10,
        "search": {"node_budget": 200_000, "time_budget": 120},
    }
)


@contextmanager
def environment(env, delete_keys=None):
    original_environ = os.environ.copy()
    os.environ.update(env)
    if delete_keys is None:
        delete_keys = []
    for key in delete_keys:
        os.environ.pop(key, None)

    yield
    os.environ = original_environ


def random_unimodular(rng: Random, n: int, steps: int = 6) -> List[List[int]]:
    """Product of elementary row operations, so the determinant is +-1"""
    p = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            p[i] = [-x for x in p[i]]
            continue
        factor = rng.choice([-2, -1, 1, 2])
        p[i] = [a + factor * b for a, b in zip(p[i], p[j])]
    return p


def random_addressing(rng: Random, n: int, t: int) -> Addressing:
    symbols = list(Symbol)
    return Addressing(n, t, tuple(tuple(rng.choice(symbols) for _ in range(t)) for _ in range(n)))
