from functools import cached_property
from pathlib import Path
from typing import Optional

from graph_addressing.config import ToolkitConfig, load_config
from graph_addressing.graphs.core import Graph
from graph_addressing.graphs.specs import load_graph


class ContextHelper(object):
    def __init__(
        self,
        config_path: Optional[Path] = None,
        overrides: Optional[dict] = None,
        json_output: bool = False,
    ):
        self._config_path = config_path
        self._overrides = overrides or {}
        self.json_output = json_output

    @cached_property
    def config(self) -> ToolkitConfig:
        return load_config(self._config_path, overrides=self._overrides)

    def graph(self, spec_or_path: str) -> Graph:
        return load_graph(spec_or_path, self.config.max_vertices)

    @staticmethod
    def init(config_path=None, overrides=None, json_output=False):
        return ContextHelper(config_path, overrides, json_output)
