import logging
import os
from pathlib import Path
from typing import Mapping, Optional

from pydantic import BaseModel, field_validator

from graph_addressing.constants import (
    DEFAULT_CONFIG_FILE,
    DEFAULT_MAX_VERTICES,
    GRAPH_ADDRESSING_CONFIG,
    GRAPH_ADDRESSING_MAX_VERTICES,
    GRAPH_ADDRESSING_NODE_BUDGET,
    GRAPH_ADDRESSING_TIME_BUDGET,
)
from graph_addressing.utils import load_yaml_or_empty_dict

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_TEMPLATE = """
# Configuration of the graph addressing toolkit
# Largest graph any generator or product may build
max_vertices: {max_vertices}

# Exact biclique partition search is skipped for larger graphs,
# reports then only carry bounds
max_search_vertices: 16

# Threads used for the all-pairs BFS
workers: 1

search:
  # Search nodes allowed before giving up with the best bounds so far
  node_budget: 2000000

  # Wall clock limit in seconds
  time_budget: 300

  # Optional upper bound known from elsewhere, targets at or above it are not searched
  # initial_upper: 6

  # Recompute the residual spectral bound every k levels (1 = at every node)
  bound_interval: 1

  # Threads splitting the root branches of the search
  threads: 1

  # Entries kept in the table of refuted residual multigraphs
  cache_size: 200000
""".lstrip()


class SearchConfig(BaseModel):
    node_budget: int = 2_000_000
    time_budget: float = 300
    initial_upper: Optional[int] = None
    bound_interval: int = 1
    threads: int = 1
    cache_size: int = 200_000

    @field_validator("node_budget", "time_budget", "bound_interval", "threads", "cache_size")
    def positive(cls, v, info):
        if v <= 0:
            raise ValueError(f"{info.field_name} must be positive, got {v}")
        return v

    @field_validator("initial_upper")
    def nonnegative_upper(cls, v):
        if v is not None and v < 0:
            raise ValueError(f"initial_upper must be nonnegative, got {v}")
        return v


class ToolkitConfig(BaseModel):
    max_vertices: int = DEFAULT_MAX_VERTICES
    max_search_vertices: int = 16
    workers: int = 1
    search: SearchConfig = SearchConfig()

    @field_validator("max_vertices", "max_search_vertices", "workers")
    def positive(cls, v, info):
        if v <= 0:
            raise ValueError(f"{info.field_name} must be positive, got {v}")
        return v

    @staticmethod
    def sample_config(**kwargs):
        kwargs.setdefault("max_vertices", DEFAULT_MAX_VERTICES)
        return DEFAULT_CONFIG_TEMPLATE.format(**kwargs)


def _env_overrides(env: Mapping[str, str]) -> dict:
    overrides: dict = {}
    if GRAPH_ADDRESSING_MAX_VERTICES in env:
        overrides["max_vertices"] = env[GRAPH_ADDRESSING_MAX_VERTICES]
    search = {}
    if GRAPH_ADDRESSING_NODE_BUDGET in env:
        search["node_budget"] = env[GRAPH_ADDRESSING_NODE_BUDGET]
    if GRAPH_ADDRESSING_TIME_BUDGET in env:
        search["time_budget"] = env[GRAPH_ADDRESSING_TIME_BUDGET]
    if search:
        overrides["search"] = search
    return overrides


def _merge(base: dict, overrides: dict) -> dict:
    merged = dict(base)
    for key, value in overrides.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_config(
    path: Optional[Path] = None,
    env: Optional[Mapping[str, str]] = None,
    overrides: Optional[dict] = None,
) -> ToolkitConfig:
    """
    Defaults, then the yaml file, then environment variables, then ``overrides``.
    Without an explicit path the file named by GRAPH_ADDRESSING_CONFIG is used,
    falling back to addressing.yml in the working directory when it exists.
    """
    env = os.environ if env is None else env
    if path is None:
        path = Path(env.get(GRAPH_ADDRESSING_CONFIG, DEFAULT_CONFIG_FILE))
    data = load_yaml_or_empty_dict(path) or {}
    if data:
        logger.info(f"Loaded configuration from {path}")
    data = _merge(data, _env_overrides(env))
    data = _merge(data, overrides or {})
    return ToolkitConfig.model_validate(data)
