import unittest
from pathlib import Path
from tempfile import TemporaryDirectory
from unittest.mock import patch

from graph_addressing.config import ToolkitConfig
from graph_addressing.context_helper import ContextHelper
from graph_addressing.graphs.core import GraphSizeError


class TestContextHelper(unittest.TestCase):
    def test_config_from_file_and_overrides(self):
        with TemporaryDirectory() as tmp_dir_raw:
            path = Path(tmp_dir_raw) / "addressing.yml"
            path.write_text("max_vertices: 40\nworkers: 3\n")
            helper = ContextHelper.init(path, {"max_vertices": 20})
            assert helper.config.max_vertices == 20
            assert helper.config.workers == 3

    def test_config_is_loaded_once(self):
        with patch("graph_addressing.context_helper.load_config", return_value=ToolkitConfig()) as load:
            helper = ContextHelper.init()
            assert helper.config is helper.config
            load.assert_called_once_with(None, overrides={})

    def test_graph_respects_cap(self):
        helper = ContextHelper.init(overrides={"max_vertices": 8})
        with patch("graph_addressing.context_helper.load_config", return_value=ToolkitConfig(max_vertices=8)):
            assert helper.graph("hamming:3,2").n == 8
            with self.assertRaises(GraphSizeError):
                helper.graph("hamming:2,3")

    def test_graph_from_file(self):
        helper = ContextHelper.init()
        helper.config = ToolkitConfig()
        with TemporaryDirectory() as tmp_dir_raw:
            path = Path(tmp_dir_raw) / "triangle.txt"
            path.write_text("3 3\n0 1\n1 2\n0 2\n")
            graph = helper.graph(str(path))
        assert graph.m == 3
        assert graph.name == "triangle"

    def test_json_flag(self):
        assert ContextHelper.init(json_output=True).json_output
        assert not ContextHelper.init().json_output
