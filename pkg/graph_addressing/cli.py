import functools
import logging
from pathlib import Path
from typing import Optional

import click
from click import ClickException, Context
from pydantic import ValidationError
from tabulate import tabulate

from graph_addressing.addressing.constructions import constructive_addressing
from graph_addressing.addressing.core import (
    AddressingError,
    addressing_to_bicliques,
    verify_addressing,
    verify_biclique_partition,
)
from graph_addressing.addressing.io import (
    format_addressing,
    format_bicliques,
    parse_addressing,
    parse_bicliques,
)
from graph_addressing.claims import CLAIMS, ClaimError, run_all, run_claim
from graph_addressing.config import SearchConfig, ToolkitConfig
from graph_addressing.constants import (
    DEFAULT_CONFIG_FILE,
    EXIT_BUDGET,
    EXIT_USAGE,
    EXIT_VIOLATION,
)
from graph_addressing.context_helper import ContextHelper
from graph_addressing.graphs.core import Graph, GraphError, all_pairs_distances, distance_multigraph
from graph_addressing.linalg.bounds import (
    graham_pollak_upper,
    triangular_lower,
    winkler_upper,
)
from graph_addressing.linalg.matrix import MatrixError, inertia, parse_matrix
from graph_addressing.linalg.spectra import (
    SpectrumError,
    SpectrumTable,
    hamming_distance_spectrum,
    johnson_distance_spectrum,
    srg_distance_spectrum,
    triangular_distance_spectrum,
)
from graph_addressing.search.report import bp_report
from graph_addressing.search.solver import SearchStatus, min_biclique_partition
from graph_addressing.utils import dump_json

logger = logging.getLogger(__name__)

DOMAIN_ERRORS = (
    GraphError,
    MatrixError,
    SpectrumError,
    AddressingError,
    ClaimError,
    ValidationError,
)


class UsageFailure(ClickException):
    exit_code = EXIT_USAGE


def domain_errors(command):
    """Domain exceptions become usage failures with exit code 2"""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except DOMAIN_ERRORS as e:
            raise UsageFailure(str(e))

    return wrapper


def _emit(helper: ContextHelper, document: dict, text: str):
    click.echo(dump_json(document) if helper.json_output else text)


def closed_form_spectrum(graph: Graph) -> Optional[SpectrumTable]:
    family = graph.family
    if family is None:
        return None
    if family.kind == "complete" and family.params[0] >= 2:
        return hamming_distance_spectrum(1, family.params[0])
    if family.kind == "hamming":
        return hamming_distance_spectrum(*family.params)
    if family.kind == "triangular":
        return triangular_distance_spectrum(*family.params)
    if family.kind == "johnson":
        return johnson_distance_spectrum(*family.params)
    if family.kind == "petersen":
        return srg_distance_spectrum(10, 3, 0, 1)
    if family.kind == "clebsch":
        return srg_distance_spectrum(16, 5, 0, 2)
    return None


@click.group(
    name="graph-addressing", context_settings=dict(help_option_names=["-h", "--help"])
)
@click.option(
    "--config",
    "config_path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help=f"Configuration file, {DEFAULT_CONFIG_FILE} in the working directory by default.",
)
@click.option("--json", "json_output", is_flag=True, default=False, help="JSON output.")
@click.option("-v", "--verbose", is_flag=True, default=False, help="Debug logging.")
@click.option("--max-vertices", type=int, default=None, help="Largest graph to build.")
@click.pass_context
def cli(ctx: Context, config_path, json_output, verbose, max_vertices):
    """Graph addressings, distance spectra and biclique partitions"""
    logging.basicConfig(level=logging.DEBUG if verbose else logging.INFO)
    overrides = {} if max_vertices is None else {"max_vertices": max_vertices}
    ctx.ensure_object(dict)
    ctx.obj["context_helper"] = ContextHelper.init(config_path, overrides, json_output)


@cli.command()
@click.argument("spec")
@click.pass_context
@domain_errors
def gen(ctx: Context, spec: str):
    """Print a graph as 'n m' followed by its edges"""
    helper: ContextHelper = ctx.obj["context_helper"]
    graph = helper.graph(spec)
    _emit(
        helper,
        {"name": str(graph), "n": graph.n, "edges": graph.sorted_edges()},
        graph.format(),
    )


@cli.command()
@click.argument("spec")
@click.pass_context
@domain_errors
def distances(ctx: Context, spec: str):
    """Print the distance matrix D(G)"""
    helper: ContextHelper = ctx.obj["context_helper"]
    matrix = all_pairs_distances(helper.graph(spec), helper.config.workers)
    _emit(helper, {"order": matrix.order, "rows": matrix.rows}, matrix.format())


@cli.command()
@click.argument("spec")
@click.pass_context
@domain_errors
def spectrum(ctx: Context, spec: str):
    """Closed-form spectrum of D(G), checked against the explicit matrix"""
    helper: ContextHelper = ctx.obj["context_helper"]
    graph = helper.graph(spec)
    matrix = all_pairs_distances(graph, helper.config.workers)
    table = closed_form_spectrum(graph)
    if table is None:
        raise UsageFailure(f"No closed-form spectrum known for {graph}, try 'inertia'")
    mismatches = table.mismatches(matrix)
    _emit(
        helper,
        {"graph": str(graph), "spectrum": table.as_dict(), "mismatches": mismatches},
        table.format() + "".join(f"\nMISMATCH {m}" for m in mismatches),
    )
    if mismatches:
        ctx.exit(EXIT_VIOLATION)


@cli.command(name="inertia")
@click.argument("spec", required=False)
@click.option(
    "--matrix",
    "matrix_file",
    type=click.File("r"),
    default=None,
    help="Symmetric integer matrix file ('n' then n*n entries) instead of a graph.",
)
@click.pass_context
@domain_errors
def inertia_command(ctx: Context, spec: Optional[str], matrix_file):
    """Inertia (n_plus, n_zero, n_minus) of D(G) or of a given matrix"""
    helper: ContextHelper = ctx.obj["context_helper"]
    if (spec is None) == (matrix_file is None):
        raise UsageFailure("Give either a graph spec or --matrix")
    if matrix_file is not None:
        matrix = parse_matrix(matrix_file.read())
    else:
        matrix = all_pairs_distances(helper.graph(spec), helper.config.workers)
    result = inertia(matrix)
    _emit(
        helper,
        {"n_plus": result.n_plus, "n_zero": result.n_zero, "n_minus": result.n_minus},
        str(result),
    )


@cli.command()
@click.argument("spec")
@click.pass_context
@domain_errors
def bound(ctx: Context, spec: str):
    """Lower and upper bounds on N(G) that need no search"""
    helper: ContextHelper = ctx.obj["context_helper"]
    graph = helper.graph(spec)
    spectral = inertia(all_pairs_distances(graph, helper.config.workers)).witsenhausen
    bounds = {"spectral_lower": spectral}
    family = graph.family
    if family is not None and family.kind == "triangular":
        bounds["improved_lower"] = triangular_lower(family.params[0])
    addressing = constructive_addressing(graph)
    if addressing is not None:
        bounds["constructive_upper"] = addressing.t
    bounds["winkler_upper"] = winkler_upper(graph)
    bounds["graham_pollak_upper"] = graham_pollak_upper(graph)
    _emit(helper, bounds, tabulate(list(bounds.items()), headers=["bound", "value"]))


@cli.command()
@click.argument("spec")
@click.pass_context
@domain_errors
def address(ctx: Context, spec: str):
    """Print a constructive addressing of G"""
    helper: ContextHelper = ctx.obj["context_helper"]
    graph = helper.graph(spec)
    addressing = constructive_addressing(graph)
    if addressing is None:
        raise UsageFailure(f"No construction known for {graph}, try 'search'")
    _emit(
        helper,
        {"n": addressing.n, "t": addressing.t, "rows": addressing.to_strings()},
        format_addressing(addressing),
    )


@cli.command()
@click.argument("spec")
@click.argument("certificate", type=click.File("r"))
@click.option(
    "--bicliques",
    is_flag=True,
    default=False,
    help="The certificate is a biclique list instead of an addressing.",
)
@click.pass_context
@domain_errors
def verify(ctx: Context, spec: str, certificate, bicliques: bool):
    """Check an addressing (or a biclique partition) against G; '-' reads stdin"""
    helper: ContextHelper = ctx.obj["context_helper"]
    graph = helper.graph(spec)
    text = certificate.read()
    if bicliques:
        violation = verify_biclique_partition(
            distance_multigraph(graph, helper.config.workers), parse_bicliques(text)
        )
    else:
        violation = verify_addressing(graph, parse_addressing(text))
    _emit(
        helper,
        {"ok": violation is None, "violation": violation},
        "ok" if violation is None else f"violation {violation}",
    )
    if violation is not None:
        ctx.exit(EXIT_VIOLATION)


def _search_config(config: ToolkitConfig, **updates) -> SearchConfig:
    values = config.search.model_dump()
    values.update({k: v for k, v in updates.items() if v is not None})
    return SearchConfig.model_validate(values)


@cli.command()
@click.argument("spec")
@click.option("--node-budget", type=int, default=None, help="Search nodes allowed.")
@click.option("--time-budget", type=float, default=None, help="Seconds allowed.")
@click.option("--initial-upper", type=int, default=None, help="Known upper bound.")
@click.option("--threads", type=int, default=None, help="Threads splitting the root.")
@click.pass_context
@domain_errors
def search(ctx: Context, spec: str, node_budget, time_budget, initial_upper, threads):
    """Exact minimum biclique partition of the distance multigraph"""
    helper: ContextHelper = ctx.obj["context_helper"]
    graph = helper.graph(spec)
    config = _search_config(
        helper.config,
        node_budget=node_budget,
        time_budget=time_budget,
        initial_upper=initial_upper,
        threads=threads,
    )
    seeds = []
    addressing = constructive_addressing(graph)
    if addressing is not None:
        seeds.append(addressing_to_bicliques(addressing))
    result = min_biclique_partition(
        distance_multigraph(graph, helper.config.workers), config, seeds
    )
    summary = [
        ["status", result.status.value],
        ["best_size", result.best_size],
        ["proven_lower", result.proven_lower],
        ["nodes_explored", result.nodes_explored],
    ]
    _emit(
        helper,
        {
            "status": result.status,
            "best_size": result.best_size,
            "proven_lower": result.proven_lower,
            "nodes_explored": result.nodes_explored,
            "certificate": format_bicliques(result.certificate or []).splitlines(),
        },
        tabulate(summary) + "\n" + format_bicliques(result.certificate or []),
    )
    if result.status is SearchStatus.BUDGET_EXHAUSTED:
        ctx.exit(EXIT_BUDGET)


@cli.command()
@click.argument("spec")
@click.pass_context
@domain_errors
def report(ctx: Context, spec: str):
    """Bounds, constructions and exact search for N(G)"""
    helper: ContextHelper = ctx.obj["context_helper"]
    result = bp_report(helper.graph(spec), helper.config)
    rows = [
        ["inertia of D", str(result.inertia)],
        ["spectral lower", result.spectral_lower],
        ["improved lower", result.improved_lower],
        ["constructive upper", result.constructive_upper],
        ["constructive eigensharp", result.constructive_eigensharp],
        ["known upper", result.known_upper],
        ["Winkler upper", result.winkler_upper],
        ["Graham-Pollak upper", result.graham_pollak_upper],
        ["search", f"{result.search.status.value} {result.search.best_size}"],
        ["search proven lower", result.search.proven_lower],
        ["N(G) in", f"[{result.lower}, {result.upper}]"],
    ]
    if result.hoffman_zaks is not None:
        rows.append(
            ["Hoffman-Zaks", f"[{result.hoffman_zaks.lower}, {result.hoffman_zaks.upper}]"]
        )
    if result.product is not None:
        rows.append(
            [
                "product sandwich",
                f"{result.product.product_lower} <= N <= {result.product.product_upper}",
            ]
        )
    rows = [row for row in rows if row[1] is not None]
    document = {
        "graph": result.graph,
        "n": result.n,
        "inertia": result.inertia.as_tuple(),
        "spectral_lower": result.spectral_lower,
        "improved_lower": result.improved_lower,
        "constructive_upper": result.constructive_upper,
        "constructive_eigensharp": result.constructive_eigensharp,
        "known_upper": result.known_upper,
        "winkler_upper": result.winkler_upper,
        "graham_pollak_upper": result.graham_pollak_upper,
        "hoffman_zaks": result.hoffman_zaks,
        "product": result.product,
        "search": {
            "status": result.search.status,
            "best_size": result.search.best_size,
            "proven_lower": result.search.proven_lower,
            "nodes_explored": result.search.nodes_explored,
        },
        "lower": result.lower,
        "upper": result.upper,
    }
    _emit(helper, document, f"{result.graph}\n" + tabulate(rows))


@cli.command()
@click.argument("claim_id", type=click.Choice(sorted(CLAIMS) + ["all"]))
@click.option("--n", "n", type=int, default=None)
@click.option("--q", "q", type=int, default=None)
@click.option("--m", "m", type=int, default=None)
@click.pass_context
@domain_errors
def reproduce(ctx: Context, claim_id: str, n, q, m):
    """Recompute a published claim and print PASS or FAIL"""
    helper: ContextHelper = ctx.obj["context_helper"]
    if claim_id == "all":
        outcomes = run_all(helper.config)
    else:
        outcomes = [run_claim(claim_id, helper.config, n=n, q=q, m=m)]
    rows = [[o.claim_id, o.verdict, o.expected, o.computed] for o in outcomes]
    notes = [f"{o.claim_id}: {note}" for o in outcomes for note in o.notes]
    _emit(
        helper,
        {"outcomes": outcomes},
        tabulate(rows, headers=["claim", "verdict", "expected", "computed"])
        + "".join(f"\n{note}" for note in notes),
    )
    if not all(o.passed for o in outcomes):
        ctx.exit(EXIT_VIOLATION)


@cli.command()
@click.option("--max-vertices", type=int, default=None, help="Generator cap to write.")
@click.pass_context
def init(ctx: Context, max_vertices):
    """Write a sample configuration file to the working directory"""
    config_path = Path.cwd() / DEFAULT_CONFIG_FILE
    kwargs = {} if max_vertices is None else {"max_vertices": max_vertices}
    with open(config_path, "w") as f:
        f.write(ToolkitConfig.sample_config(**kwargs))
    click.echo(f"Configuration generated in {config_path}")
