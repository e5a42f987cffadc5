"""
Graph spec strings (``hamming:3,2``, ``product:complete:3□complete:2``) and
the plain-text graph format (``n m`` followed by ``u v`` lines).
"""
import logging
from pathlib import Path
from typing import Callable, Dict, List, Tuple

from cachetools import LRUCache, cached
from cachetools.keys import hashkey

from graph_addressing.constants import DEFAULT_MAX_VERTICES
from graph_addressing.graphs import families
from graph_addressing.graphs.core import Edge, Graph, GraphError

logger = logging.getLogger(__name__)

PRODUCT_SEPARATORS = ("□", "*")


class GraphSpecError(GraphError):
    ...


def _ints(text: str) -> List[int]:
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise GraphSpecError(f"Expected comma separated integers, got '{text}'")


def _exactly(count: int, builder: Callable[..., Graph]) -> Callable[[List[int], int], Graph]:
    def build(args: List[int], max_vertices: int) -> Graph:
        if len(args) != count:
            raise GraphSpecError(f"Expected {count} parameter(s), got {len(args)}")
        return builder(*args, max_vertices=max_vertices)

    return build


GENERATORS: Dict[str, Callable[[List[int], int], Graph]] = {
    "complete": _exactly(1, families.gen_complete),
    "hamming": _exactly(2, families.gen_hamming),
    "triangular": _exactly(1, families.gen_triangular),
    "johnson": _exactly(2, families.gen_johnson),
    "petersen": _exactly(0, lambda max_vertices: families.gen_petersen()),
    "clebsch": _exactly(0, lambda max_vertices: families.gen_clebsch()),
    "multipartite": lambda args, max_vertices: families.gen_complete_multipartite(
        args, max_vertices=max_vertices
    ),
    "path": _exactly(1, families.gen_path),
    "cycle": _exactly(1, families.gen_cycle),
    "star": _exactly(1, families.gen_star),
    "tree": lambda args, max_vertices: families.gen_tree(args, max_vertices=max_vertices),
}


def _split_extra_edges(text: str) -> Tuple[str, List[Edge]]:
    if "+" not in text:
        return text, []
    base, extra = text.split("+", 1)
    edges = []
    for item in extra.split(","):
        try:
            u, v = item.split("-")
            edges.append((int(u), int(v)))
        except ValueError:
            raise GraphSpecError(f"Extra edge must look like 'u-v', got '{item}'")
    return base, edges


def _parse_factor(text: str, max_vertices: int) -> Graph:
    text, extra = _split_extra_edges(text.strip())
    name, _, args = text.partition(":")
    if name not in GENERATORS:
        raise GraphSpecError(
            f"Unknown graph family '{name}', expected one of {', '.join(sorted(GENERATORS))}"
        )
    graph = GENERATORS[name](_ints(args), max_vertices)
    return families.add_edges(graph, extra) if extra else graph


@cached(
    cache=LRUCache(maxsize=64),
    key=lambda spec, max_vertices=DEFAULT_MAX_VERTICES: hashkey(spec, max_vertices),
)
def parse_graph_spec(spec: str, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    spec = spec.strip()
    body = spec[len("product:") :] if spec.startswith("product:") else spec
    parts = [body]
    for separator in PRODUCT_SEPARATORS:
        parts = [piece for part in parts for piece in part.split(separator)]
    if len(parts) == 1 and not spec.startswith("product:"):
        return _parse_factor(body, max_vertices)
    factors = [_parse_factor(p, max_vertices) for p in parts]
    logger.debug(f"Building product of {len(factors)} factors from '{spec}'")
    return families.cartesian_product(factors, max_vertices=max_vertices)


def parse_graph_text(text: str, name: str = "") -> Graph:
    lines = [line.split("#")[0].strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines:
        raise GraphSpecError("Empty graph text")
    try:
        n, m = (int(x) for x in lines[0].split())
        edges = [tuple(int(x) for x in line.split()) for line in lines[1:]]
    except ValueError:
        raise GraphSpecError("Graph text must be 'n m' followed by 'u v' lines")
    if len(edges) != m or any(len(e) != 2 for e in edges):
        raise GraphSpecError(f"Header announces {m} edges, found {len(edges)} lines")
    return Graph.from_edges(n, edges, name=name)


def read_graph(path: Path) -> Graph:
    return parse_graph_text(Path(path).read_text(), name=Path(path).stem)


def load_graph(spec_or_path: str, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    path = Path(spec_or_path)
    if path.is_file():
        logger.info(f"Reading graph from {path}")
        graph = read_graph(path)
        families.check_size(graph.n, max_vertices, f"Graph in {path}")
        return graph
    return parse_graph_spec(spec_or_path, max_vertices)
