import logging
from pathlib import Path
from typing import Dict, Optional, Tuple

import click
from rich.markup import escape

from app.core.errors import InvalidParameterError
from app.core.generators import GraphFactory
from app.core.oracles import exact_layered_pathwidth, exact_pathwidth, minor_contains
from app.core.pipeline import check_pipeline, run_pipeline
from app.core.reporting import SweepReporter, SweepRow, decomposition_to_dot, run_sweep, spqr_to_dot
from app.core.serialization import (
    DecompositionDocument,
    MinorModelDocument,
    PipelineDocument,
    SpqrDocument,
    load_document,
    read_edge_list,
    write_edge_list,
)
from app.core.spqr import build_spqr, verify_spqr
from app.core.validation import verify_artifact
from config.cli import config as config_group
from config.manager import ConfigManager
from config.schema import GeneratorSpec, RunConfig

from .utils import (
    EXIT_VERIFY_FAILED,
    console,
    create_progress_bar,
    emit,
    err_console,
    exit_on_error,
)

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

INPUT_FILE = click.Path(exists=True, dir_okay=False, path_type=Path)
OUTPUT_FILE = click.Path(dir_okay=False, writable=True, path_type=Path)


def limit_options(f):
    """Add the oracle limit flags to a command."""
    f = click.option("--limit-minor-pattern", type=click.IntRange(min=1), default=None,
                     help="Largest pattern graph for the minor search")(f)
    f = click.option("--limit-minor", type=click.IntRange(min=1), default=None,
                     help="Largest host graph for the minor search")(f)
    f = click.option("--limit-lpw", type=click.IntRange(min=1), default=None,
                     help="Largest graph for the exact layered pathwidth oracle")(f)
    f = click.option("--limit-pw", type=click.IntRange(min=1), default=None,
                     help="Largest graph for the exact pathwidth oracle")(f)
    return f


def _overrides(limit_pw: Optional[int], limit_lpw: Optional[int], limit_minor: Optional[int],
               limit_minor_pattern: Optional[int]) -> Dict[str, Optional[int]]:
    return {
        "max_pw_vertices": limit_pw,
        "max_lpw_vertices": limit_lpw,
        "max_minor_host": limit_minor,
        "max_minor_pattern": limit_minor_pattern,
    }


def _run_config(ctx: click.Context, command: str, overrides: Optional[Dict[str, Optional[int]]] = None, **fields) -> RunConfig:
    manager: ConfigManager = ctx.obj["manager"]
    return RunConfig(command=command, limits=manager.limits(overrides), **fields)


@click.group()
@click.option("--debug/--no-debug", default=False, help="Enable debug logging and tracebacks")
@click.option("--verbose", is_flag=True, help="Log pipeline milestones")
@click.option("--config-dir", type=click.Path(file_okay=False, path_type=Path), default=None,
              help="Configuration directory (default ~/.layered_decomp)")
@click.pass_context
def cli(ctx: click.Context, debug: bool, verbose: bool, config_dir: Optional[Path]):
    """Layered decomposition toolkit: good tree decompositions and layered path decompositions."""
    level = logging.DEBUG if debug else logging.INFO if verbose else logging.WARNING
    logging.basicConfig(level=level, format=LOG_FORMAT)
    logging.getLogger().setLevel(level)
    ctx.obj = {
        "debug": debug,
        "manager": ConfigManager(str(config_dir) if config_dir is not None else None),
    }


@cli.command()
@click.argument("family")
@click.argument("params", nargs=-1, type=int)
@click.option("--seed", type=int, default=None, help="Seed for randomized families")
@click.option("--out", type=OUTPUT_FILE, default=None, help="Output file; stdout when unset")
@click.pass_context
@exit_on_error
def gen(ctx: click.Context, family: str, params: Tuple[int, ...], seed: Optional[int], out: Optional[Path]):
    """Generate a graph family as an edge list.

    Families: path, cycle, complete, cbt, qk, tplus, grid, tree, outerplanar,
    triangulation, sp, halin.
    """
    run = _run_config(ctx, "gen", generator=GeneratorSpec(family=family, params=params), seed=seed, out=out)
    spec = run.generator
    g = GraphFactory.build(spec.family, spec.params, seed=run.seed)
    comment = " ".join([spec.family, *map(str, spec.params)])
    if run.seed is not None:
        comment += f" seed={run.seed}"
    emit(write_edge_list(g, comment=comment), run.out)


@cli.command()
@click.argument("input_path", type=INPUT_FILE)
@click.option("--root", type=int, default=None, help="bfs root; smallest vertex by default")
@click.option("--format", "fmt", type=click.Choice(["json", "dot", "summary"]), default="json",
              help="pipeline/v1 JSON, DOT of the good tree decomposition, or a TSV summary row")
@click.option("--out", type=OUTPUT_FILE, default=None, help="Output file; stdout when unset")
@limit_options
@click.pass_context
@exit_on_error
def decompose(ctx: click.Context, input_path: Path, root: Optional[int], fmt: str, out: Optional[Path],
              limit_pw: Optional[int], limit_lpw: Optional[int], limit_minor: Optional[int],
              limit_minor_pattern: Optional[int]):
    """Run the pipeline: good tree decomposition, then a layered path decomposition."""
    run = _run_config(ctx, "decompose", _overrides(limit_pw, limit_lpw, limit_minor, limit_minor_pattern),
                      input_path=input_path, root=root, format=fmt, out=out)
    g = read_edge_list(run.input_path)
    result = run_pipeline(g, root=run.root, limits=run.limits)
    check = check_pipeline(g, result)
    if not check:
        err_console.print(f"[red]Verification failed:[/red] {escape(check.diagnostic)}")
        return EXIT_VERIFY_FAILED
    if run.format == "json":
        text = PipelineDocument.from_result(result).to_json()
    elif run.format == "dot":
        text = decomposition_to_dot(result.good.td, name="good", provenance=result.good.provenance)
    else:
        text = SweepReporter([SweepRow(run.input_path.name, **_numbers(result.report()))]).to_tsv()
    emit(text, run.out)
    return 0


def _numbers(report: dict) -> dict:
    return {key: report[key] for key in ("n", "m", "w", "p", "ell", "bound")}


@cli.command()
@click.argument("graph_path", type=INPUT_FILE)
@click.argument("artifact_path", type=INPUT_FILE)
@click.pass_context
@exit_on_error
def verify(ctx: click.Context, graph_path: Path, artifact_path: Path):
    """Check a JSON artifact against a graph; exit 1 on the first failure."""
    g = read_edge_list(graph_path)
    document = load_document(artifact_path.read_text(encoding="utf-8"))
    result = verify_artifact(g, document)
    if not result:
        click.echo(f"FAIL {document.schema_id}: {result.diagnostic}")
        return EXIT_VERIFY_FAILED
    click.echo(f"ok {document.schema_id}")
    return 0


@cli.command()
@click.argument("which", type=click.Choice(["pw", "lpw", "minor"]))
@click.argument("input_path", type=INPUT_FILE)
@click.option("--pattern", "pattern_path", type=INPUT_FILE, default=None,
              help="Pattern graph for the minor search")
@click.option("--out", type=OUTPUT_FILE, default=None, help="Write the witness artifact here")
@limit_options
@click.pass_context
@exit_on_error
def oracle(ctx: click.Context, which: str, input_path: Path, pattern_path: Optional[Path], out: Optional[Path],
           limit_pw: Optional[int], limit_lpw: Optional[int], limit_minor: Optional[int],
           limit_minor_pattern: Optional[int]):
    """Exact pathwidth, exact layered pathwidth, or minor containment of a small graph."""
    run = _run_config(ctx, "oracle", _overrides(limit_pw, limit_lpw, limit_minor, limit_minor_pattern),
                      input_path=input_path, out=out)
    g = read_edge_list(run.input_path)
    witness: Optional[str] = None
    if which == "pw":
        value, pd = exact_pathwidth(g, run.limits)
        click.echo(str(value))
        witness = DecompositionDocument.from_path(pd).to_json()
    elif which == "lpw":
        value, pd, layering = exact_layered_pathwidth(g, run.limits)
        click.echo(str(value))
        witness = DecompositionDocument.from_path(pd, layering).to_json()
    else:
        if pattern_path is None:
            raise InvalidParameterError("oracle minor needs --pattern")
        h = read_edge_list(pattern_path)
        found = minor_contains(g, h, run.limits)
        click.echo("yes" if found else "no")
        if found:
            witness = MinorModelDocument.from_model(h, found.model).to_json()
    if run.out is not None and witness is not None:
        emit(witness, run.out)
    return 0


@cli.command()
@click.argument("directory", type=click.Path(exists=True, file_okay=False, path_type=Path))
@click.option("--table", is_flag=True, help="Print a rich table instead of TSV")
@limit_options
@click.pass_context
@exit_on_error
def sweep(ctx: click.Context, directory: Path, table: bool,
          limit_pw: Optional[int], limit_lpw: Optional[int], limit_minor: Optional[int],
          limit_minor_pattern: Optional[int]):
    """Decompose and verify every .txt edge list of a directory."""
    manager: ConfigManager = ctx.obj["manager"]
    limits = manager.limits(_overrides(limit_pw, limit_lpw, limit_minor, limit_minor_pattern))
    with create_progress_bar() as progress:
        task = progress.add_task(f"Sweeping {directory}...", total=None)
        reporter = run_sweep(
            directory,
            limits=limits,
            on_file=lambda path: progress.update(task, description=f"Decomposing {path.name}"),
        )
    if table:
        console.print(reporter.to_table(title=f"Sweep of {directory}"))
    else:
        click.echo(reporter.to_tsv(), nl=False)
    return 0 if reporter.failed == 0 else EXIT_VERIFY_FAILED


@cli.command()
@click.argument("input_path", type=INPUT_FILE)
@click.option("--format", "fmt", type=click.Choice(["json", "dot"]), default="json", help="spqr/v1 JSON or DOT")
@click.option("--out", type=OUTPUT_FILE, default=None, help="Output file; stdout when unset")
@click.pass_context
@exit_on_error
def spqr(ctx: click.Context, input_path: Path, fmt: str, out: Optional[Path]):
    """SPQR tree of a 2-connected graph."""
    run = _run_config(ctx, "spqr", input_path=input_path, format=fmt, out=out)
    g = read_edge_list(run.input_path)
    s = build_spqr(g)
    check = verify_spqr(g, s)
    if not check:
        err_console.print(f"[red]Verification failed:[/red] {escape(check.diagnostic)}")
        return EXIT_VERIFY_FAILED
    emit(SpqrDocument.from_spqr(s).to_json() if run.format == "json" else spqr_to_dot(s), run.out)
    return 0


cli.add_command(config_group)


if __name__ == "__main__":
    cli()
