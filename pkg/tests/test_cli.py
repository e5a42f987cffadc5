import json
import os
import unittest
from pathlib import Path
from tempfile import TemporaryDirectory

import yaml
from click.testing import CliRunner

from graph_addressing.cli import (
    address,
    bound,
    cli,
    distances,
    gen,
    init,
    inertia_command,
    report,
    reproduce,
    search,
    spectrum,
    verify,
)
from graph_addressing.config import ToolkitConfig
from graph_addressing.constants import EXIT_BUDGET, EXIT_USAGE, EXIT_VIOLATION
from graph_addressing.context_helper import ContextHelper

from .utils import test_config


def _obj(json_output=False):
    context_helper = ContextHelper.init(json_output=json_output)
    context_helper.config = test_config
    return dict(context_helper=context_helper)


class TestGraphCommands(unittest.TestCase):
    def test_gen(self):
        runner = CliRunner()
        result = runner.invoke(gen, ["path:3"], obj=_obj())
        assert result.exit_code == 0
        assert result.output.strip() == "3 2\n0 1\n1 2"

    def test_gen_unknown_family(self):
        runner = CliRunner()
        result = runner.invoke(gen, ["nonsense:3"], obj=_obj())
        assert result.exit_code == EXIT_USAGE
        assert "nonsense" in result.output

    def test_gen_above_cap(self):
        runner = CliRunner()
        result = runner.invoke(gen, ["hamming:5,4"], obj=_obj())
        assert result.exit_code == EXIT_USAGE

    def test_distances(self):
        runner = CliRunner()
        result = runner.invoke(distances, ["complete:3"], obj=_obj(json_output=True))
        assert result.exit_code == 0
        assert json.loads(result.output) == {"order": 3, "rows": [[0, 1, 1], [1, 0, 1], [1, 1, 0]]}

    def test_spectrum(self):
        runner = CliRunner()
        result = runner.invoke(spectrum, ["petersen"], obj=_obj(json_output=True))
        assert result.exit_code == 0
        document = json.loads(result.output)
        assert document["spectrum"] == {"-3": 5, "0": 4, "15": 1}
        assert document["mismatches"] == []

    def test_spectrum_text_lines(self):
        runner = CliRunner()
        result = runner.invoke(spectrum, ["petersen"], obj=_obj())
        assert result.exit_code == 0
        assert sorted(result.output.splitlines()) == ["-3 5", "0 4", "15 1"]

    def test_spectrum_without_closed_form(self):
        runner = CliRunner()
        result = runner.invoke(spectrum, ["cycle:5"], obj=_obj())
        assert result.exit_code == EXIT_USAGE

    def test_inertia(self):
        runner = CliRunner()
        result = runner.invoke(inertia_command, ["triangular:5"], obj=_obj())
        assert result.exit_code == 0
        assert result.output.strip() == "(1, 5, 4)"

    def test_inertia_of_matrix(self):
        runner = CliRunner()
        with runner.isolated_filesystem():
            Path("m.txt").write_text("2\n0 1\n1 0\n")
            result = runner.invoke(inertia_command, ["--matrix", "m.txt"], obj=_obj())
        assert result.exit_code == 0
        assert result.output.strip() == "(1, 0, 1)"

    def test_inertia_needs_one_input(self):
        runner = CliRunner()
        result = runner.invoke(inertia_command, [], obj=_obj())
        assert result.exit_code == EXIT_USAGE


class TestAddressingCommands(unittest.TestCase):
    def test_bound(self):
        runner = CliRunner()
        result = runner.invoke(bound, ["triangular:6"], obj=_obj(json_output=True))
        assert result.exit_code == 0
        assert json.loads(result.output) == {
            "spectral_lower": 5,
            "improved_lower": 6,
            "winkler_upper": 14,
            "graham_pollak_upper": 28,
        }

    def test_address_then_verify(self):
        runner = CliRunner()
        result = runner.invoke(address, ["hamming:2,3"], obj=_obj())
        assert result.exit_code == 0
        assert result.output.startswith("9 4\n")
        with runner.isolated_filesystem():
            Path("h23.txt").write_text(result.output)
            verified = runner.invoke(verify, ["hamming:2,3", "h23.txt"], obj=_obj())
        assert verified.exit_code == 0
        assert verified.output.strip() == "ok"

    def test_address_without_construction(self):
        runner = CliRunner()
        result = runner.invoke(address, ["cycle:5"], obj=_obj())
        assert result.exit_code == EXIT_USAGE

    def test_verify_violation(self):
        runner = CliRunner()
        result = runner.invoke(verify, ["complete:2", "-"], input="2 1\na\na\n", obj=_obj(json_output=True))
        assert result.exit_code == EXIT_VIOLATION
        assert json.loads(result.output) == {
            "ok": False,
            "violation": {"u": 0, "v": 1, "got": 0, "want": 1},
        }

    def test_verify_bicliques_from_stdin(self):
        runner = CliRunner()
        result = runner.invoke(
            verify, ["complete:3", "-", "--bicliques"], input="0 | 1 2\n1 | 2\n", obj=_obj()
        )
        assert result.exit_code == 0

    def test_verify_malformed_certificate(self):
        runner = CliRunner()
        result = runner.invoke(verify, ["complete:3", "-"], input="3 1\na\nb\nx\n", obj=_obj())
        assert result.exit_code == EXIT_USAGE


class TestSearchCommands(unittest.TestCase):
    def test_search(self):
        runner = CliRunner()
        result = runner.invoke(search, ["complete:5"], obj=_obj(json_output=True))
        assert result.exit_code == 0
        document = json.loads(result.output)
        assert document["status"] == "optimal"
        assert document["best_size"] == 4
        assert len(document["certificate"]) == 4

    def test_search_budget(self):
        runner = CliRunner()
        result = runner.invoke(search, ["triangular:4", "--node-budget", "1"], obj=_obj())
        assert result.exit_code == EXIT_BUDGET
        assert "budget_exhausted" in result.output

    def test_search_rejects_bad_budget(self):
        runner = CliRunner()
        result = runner.invoke(search, ["complete:3", "--threads", "0"], obj=_obj())
        assert result.exit_code == EXIT_USAGE

    def test_report(self):
        runner = CliRunner()
        result = runner.invoke(report, ["triangular:4"], obj=_obj(json_output=True))
        assert result.exit_code == 0
        document = json.loads(result.output)
        assert document["inertia"] == [1, 2, 3]
        assert (document["lower"], document["upper"]) == (4, 4)
        assert document["search"]["status"] == "optimal"

    def test_report_text(self):
        runner = CliRunner()
        result = runner.invoke(report, ["hamming:2,2"], obj=_obj())
        assert result.exit_code == 0
        assert "[2, 2]" in result.output


class TestReproduce(unittest.TestCase):
    def test_single_claim(self):
        for claim_id in ["example-addressing", "t5-partition", "petersen-bound"]:
            with self.subTest(claim_id=claim_id):
                runner = CliRunner()
                result = runner.invoke(reproduce, [claim_id], obj=_obj())
                assert result.exit_code == 0
                assert "PASS" in result.output

    def test_parameters(self):
        runner = CliRunner()
        result = runner.invoke(
            reproduce, ["hamming-spectrum", "--n", "2", "--q", "3"], obj=_obj(json_output=True)
        )
        assert result.exit_code == 0
        outcome = json.loads(result.output)["outcomes"][0]
        assert outcome["passed"]
        assert outcome["claim_id"] == "hamming-spectrum"

    def test_unknown_claim(self):
        runner = CliRunner()
        result = runner.invoke(reproduce, ["no-such-claim"], obj=_obj())
        assert result.exit_code == 2


class TestGroupAndInit(unittest.TestCase):
    def test_group_options(self):
        runner = CliRunner()
        with runner.isolated_filesystem():
            result = runner.invoke(cli, ["--json", "--max-vertices", "50", "gen", "path:3"])
            capped = runner.invoke(cli, ["--max-vertices", "50", "gen", "complete:60"])
        assert result.exit_code == 0
        assert json.loads(result.output)["edges"] == [[0, 1], [1, 2]]
        assert capped.exit_code == EXIT_USAGE

    def test_config_file_option(self):
        runner = CliRunner()
        with TemporaryDirectory() as tmp:
            path = Path(tmp) / "small.yml"
            path.write_text("max_vertices: 5\n")
            result = runner.invoke(cli, ["--config", str(path), "gen", "complete:6"])
        assert result.exit_code == EXIT_USAGE

    def test_init(self):
        runner = CliRunner()
        with TemporaryDirectory() as tmp:
            cwd = os.getcwd()
            os.chdir(tmp)
            try:
                result = runner.invoke(init, ["--max-vertices", "321"], obj={})
                assert result.exit_code == 0
                with open(Path(tmp) / "addressing.yml") as f:
                    cfg = ToolkitConfig.model_validate(yaml.safe_load(f))
            finally:
                os.chdir(cwd)
        assert cfg.max_vertices == 321
        assert cfg.search.node_budget == 2_000_000
