"""
Exact minimum biclique partition of a multigraph.

A partition puts every pair (u, v) across exactly mult[u][v] bicliques, each
biclique covering a pair at most once. The search runs iterative deepening
on the number of bicliques. For a target k it branches on the bicliques that
can contain the first uncovered pair, and prunes a node when the residual
multigraph needs more bicliques than are left, which the residual
``max(n_plus, n_minus)`` bound decides exactly.
"""
import logging
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from cachetools import LRUCache

from graph_addressing.addressing.core import Biclique, verify_biclique_partition
from graph_addressing.config import SearchConfig
from graph_addressing.graphs.core import Multigraph
from graph_addressing.linalg.matrix import IntSymMatrix, inertia

logger = logging.getLogger(__name__)

Residual = List[List[int]]


class SearchError(Exception):
    ...


class SearchBudgetExhausted(Exception):
    pass


class _Cancelled(Exception):
    pass


class SearchStatus(Enum):
    OPTIMAL = "optimal"
    LOWER_BOUND_ONLY = "lower_bound_only"
    BUDGET_EXHAUSTED = "budget_exhausted"


@dataclass
class SearchResult:
    status: SearchStatus
    best_size: int
    certificate: Optional[List[Biclique]]
    proven_lower: int
    nodes_explored: int = 0
    elapsed: float = 0.0

    @property
    def optimal(self) -> bool:
        return self.status is SearchStatus.OPTIMAL


def greedy_upper(multigraph: Multigraph) -> List[Biclique]:
    """
    Peel one biclique per step: seed it with the first uncovered pair (u, v),
    then walk the remaining vertices in order, adding each to the right side
    when it still has multiplicity to every left vertex, else to the left
    side when it has multiplicity to every right vertex.
    """
    residual = [list(row) for row in multigraph.mult]
    parts = []
    pair = _first_pair(residual)
    while pair is not None:
        u, v = pair
        left, right = [u], [v]
        for w in range(multigraph.n):
            if w in (u, v):
                continue
            if all(residual[x][w] for x in left):
                right.append(w)
            elif all(residual[w][y] for y in right):
                left.append(w)
        _apply(residual, left, right, -1)
        parts.append(Biclique.of(left, right))
        pair = _first_pair(residual)
    return parts


def _first_pair(residual: Residual) -> Optional[Tuple[int, int]]:
    for u, row in enumerate(residual):
        for v in range(u + 1, len(row)):
            if row[v]:
                return u, v
    return None


def _apply(residual: Residual, left: Sequence[int], right: Sequence[int], delta: int):
    for x in left:
        for y in right:
            residual[x][y] += delta
            residual[y][x] += delta


def _key(residual: Residual) -> Tuple[int, ...]:
    return tuple(residual[u][v] for u in range(len(residual)) for v in range(u + 1, len(residual)))


def _spectral_bound(residual: Residual) -> int:
    return inertia(IntSymMatrix(tuple(tuple(row) for row in residual))).witsenhausen


def _candidates(residual: Residual, u: int, v: int) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """
    Every biclique with u on the left and v on the right whose pairs all have
    residual multiplicity. Each other vertex goes right, left or nowhere, in
    that order of preference, so larger bicliques tend to come first.
    """
    others = [
        w for w in range(len(residual)) if w not in (u, v) and (residual[u][w] or residual[w][v])
    ]
    left, right = [u], [v]

    def extend(index: int):
        if index == len(others):
            yield tuple(left), tuple(right)
            return
        w = others[index]
        if all(residual[x][w] for x in left):
            right.append(w)
            yield from extend(index + 1)
            right.pop()
        if all(residual[w][y] for y in right):
            left.append(w)
            yield from extend(index + 1)
            left.pop()
        yield from extend(index + 1)

    return extend(0)


def _single_biclique(residual: Residual, u: int, v: int) -> Optional[Biclique]:
    """The residual as one biclique through (u, v), if it is exactly that"""
    n = len(residual)
    left = [w for w in range(n) if residual[w][v]]
    right = [w for w in range(n) if residual[u][w]]
    if set(left) & set(right):
        return None
    left_set, right_set = set(left), set(right)
    for x in range(n):
        for y in range(x + 1, n):
            across = (x in left_set and y in right_set) or (x in right_set and y in left_set)
            if residual[x][y] != int(across):
                return None
    return Biclique.of(left, right)


class BicliquePartitionSearch:
    log = logging.getLogger(__name__)

    def __init__(self, multigraph: Multigraph, config: Optional[SearchConfig] = None):
        self.multigraph = multigraph
        self.config = config or SearchConfig()
        self._refuted: LRUCache = LRUCache(maxsize=self.config.cache_size)
        self._lock = threading.Lock()
        self._stop = threading.Event()
        self._nodes = 0
        self._start = 0.0

    @property
    def nodes_explored(self) -> int:
        return self._nodes

    def _tick(self):
        with self._lock:
            self._nodes += 1
            nodes = self._nodes
        if self._stop.is_set():
            raise _Cancelled()
        if nodes > self.config.node_budget:
            self._stop.set()
            raise SearchBudgetExhausted(f"Node budget of {self.config.node_budget} reached")
        if time.monotonic() - self._start > self.config.time_budget:
            self._stop.set()
            raise SearchBudgetExhausted(f"Time budget of {self.config.time_budget}s reached")

    def _refute(self, residual: Residual, remaining: int):
        key = _key(residual)
        with self._lock:
            if self._refuted.get(key, -1) < remaining:
                self._refuted[key] = remaining

    def _prune(self, residual: Residual, remaining: int, depth: int) -> bool:
        self._tick()
        if remaining == 0:
            return True
        if max(max(row) for row in residual) > remaining:
            return True
        key = _key(residual)
        with self._lock:
            known = self._refuted.get(key)
        if known is not None and known >= remaining:
            return True
        if depth % self.config.bound_interval == 0 and _spectral_bound(residual) > remaining:
            self._refute(residual, remaining)
            return True
        return False

    def _feasible(self, residual: Residual, remaining: int, depth: int, chosen: List[Biclique]) -> bool:
        pair = _first_pair(residual)
        if pair is None:
            return True
        if self._prune(residual, remaining, depth):
            return False
        u, v = pair
        if remaining == 1:
            last = _single_biclique(residual, u, v)
            if last is not None:
                chosen.append(last)
                return True
            self._refute(residual, remaining)
            return False
        for left, right in _candidates(residual, u, v):
            _apply(residual, left, right, -1)
            chosen.append(Biclique.of(left, right))
            if self._feasible(residual, remaining - 1, depth + 1, chosen):
                return True
            chosen.pop()
            _apply(residual, left, right, 1)
        self._refute(residual, remaining)
        return False

    def _search_target(self, target: int) -> Optional[List[Biclique]]:
        residual = [list(row) for row in self.multigraph.mult]
        self._stop.clear()
        if self.config.threads == 1:
            chosen: List[Biclique] = []
            return chosen if self._feasible(residual, target, 0, chosen) else None
        return self._search_target_parallel(residual, target)

    def _search_target_parallel(self, residual: Residual, target: int) -> Optional[List[Biclique]]:
        pair = _first_pair(residual)
        if pair is None:
            return []
        if self._prune(residual, target, 0):
            return None
        u, v = pair
        threads = self.config.threads
        found = {}

        def work(index: int):
            local = [list(row) for row in residual]
            try:
                for position, (left, right) in enumerate(_candidates(local, u, v)):
                    if position % threads != index:
                        continue
                    if self._stop.is_set():
                        return
                    _apply(local, left, right, -1)
                    chosen = [Biclique.of(left, right)]
                    if self._feasible(local, target - 1, 1, chosen):
                        with self._lock:
                            found[position] = chosen
                        self._stop.set()
                        return
                    _apply(local, left, right, 1)
            except _Cancelled:
                return

        exhausted = None
        with ThreadPoolExecutor(max_workers=threads) as executor:
            futures = [executor.submit(work, i) for i in range(threads)]
            for future in futures:
                try:
                    future.result()
                except SearchBudgetExhausted as e:
                    exhausted = e
        self._stop.clear()
        if found:
            return found[min(found)]
        if exhausted is not None:
            raise exhausted
        return None

    def _valid_seeds(self, seeds: Iterable[Sequence[Biclique]]) -> List[List[Biclique]]:
        valid = []
        for seed in seeds:
            violation = verify_biclique_partition(self.multigraph, seed)
            if violation is None:
                valid.append(list(seed))
            else:
                self.log.warning(f"Ignoring seed partition of size {len(seed)}: {violation}")
        return valid

    def run(self, seeds: Iterable[Sequence[Biclique]] = ()) -> SearchResult:
        self._start = time.monotonic()
        self._nodes = 0
        incumbent = min([greedy_upper(self.multigraph), *self._valid_seeds(seeds)], key=len)
        lower = max(
            inertia(self.multigraph.as_matrix()).witsenhausen, self.multigraph.max_multiplicity
        )
        cap = len(incumbent) - 1
        if self.config.initial_upper is not None:
            cap = min(cap, self.config.initial_upper - 1)
            if self.config.initial_upper < lower:
                self.log.warning(
                    f"initial_upper {self.config.initial_upper} is below the spectral bound {lower}"
                )
        self.log.info(f"Searching targets {lower}..{cap}, incumbent {len(incumbent)}")

        proven_lower = lower
        status = None
        try:
            for target in range(lower, cap + 1):
                certificate = self._search_target(target)
                self.log.debug(f"Target {target} done after {self._nodes} nodes")
                if certificate is not None:
                    self.log.info(f"Found a partition into {len(certificate)} bicliques")
                    incumbent = certificate
                    break
                proven_lower = target + 1
                self.log.info(f"No partition into {target} bicliques")
        except SearchBudgetExhausted as e:
            self.log.warning(f"{e}: bp in [{proven_lower}, {len(incumbent)}]")
            status = SearchStatus.BUDGET_EXHAUSTED

        violation = verify_biclique_partition(self.multigraph, incumbent)
        if violation is not None:
            raise SearchError(f"Search produced an invalid partition: {violation}")
        if status is None:
            status = (
                SearchStatus.OPTIMAL
                if proven_lower >= len(incumbent)
                else SearchStatus.LOWER_BOUND_ONLY
            )
        self.log.debug(f"Refuted residual table holds {len(self._refuted)} entries")
        return SearchResult(
            status=status,
            best_size=len(incumbent),
            certificate=incumbent,
            proven_lower=min(proven_lower, len(incumbent)),
            nodes_explored=self._nodes,
            elapsed=time.monotonic() - self._start,
        )


def min_biclique_partition(
    multigraph: Multigraph,
    config: Optional[SearchConfig] = None,
    seeds: Iterable[Sequence[Biclique]] = (),
) -> SearchResult:
    return BicliquePartitionSearch(multigraph, config).run(seeds)
