import logging
import sys
from typing import Optional

import click

from config import (
    DEFAULT_MAX_HOMOLOGY_VERTICES, DEFAULT_MAX_SEARCH_NODES, DEFAULT_MAX_VERTICES, DEFAULT_WORKERS,
    DIALECTS, RunConfig,
)
from errors import ContractViolation, EmptyGraph, PosetCMError, UnreadableInput, UnwritableOutput
from services.catalog import catalog_names, generate
from services.complex import export_edge_ideal
from services.poset_core import parse_poset, poset_to_text
from services.product import sweep
from services.reports import (
    EXIT_CONTRACT, EXIT_INPUT, check_report, info_report, parse_sizes, sweep_report,
    zdg_report,
)
from services.zdg import to_dot, zero_divisor_graph

# Configure logging
logger = logging.getLogger(__name__)


def _read_text(path: str) -> str:
    try:
        with open(path, "rb") as handle:
            raw = handle.read()
    except OSError as e:
        raise UnreadableInput(f"cannot read {path}: {e.strerror}")
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError as e:
        line = raw[:e.start].count(b"\n") + 1
        raise UnreadableInput(f"{path} is not valid UTF-8", line)


def _read_poset(path: str):
    return parse_poset(_read_text(path))


def _emit(text: str, output: Optional[str] = None) -> None:
    if output:
        try:
            with open(output, "w", encoding="utf-8") as handle:
                handle.write(text)
        except OSError as e:
            raise UnwritableOutput(f"cannot write {output}: {e.strerror}")
        logger.info(f"Wrote {len(text)} characters to {output}")
    else:
        click.echo(text, nl=False)


def _fail(error: Exception) -> None:
    if isinstance(error, ContractViolation):
        logger.error(f"Contract violation: {error}")
        click.echo(f"internal error: {error}", err=True)
        sys.exit(EXIT_CONTRACT)
    click.echo(f"error: {error}", err=True)
    sys.exit(EXIT_INPUT)


@click.group()
@click.option("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES, show_default=True,
              help="Vertex cap for facet enumeration.")
@click.option("--max-homology-vertices", type=int, default=DEFAULT_MAX_HOMOLOGY_VERTICES, show_default=True,
              help="Vertex cap for the homology oracle.")
@click.option("--max-search-nodes", type=int, default=DEFAULT_MAX_SEARCH_NODES, show_default=True,
              help="Node budget for the certificate matching search.")
@click.option("--workers", type=int, default=DEFAULT_WORKERS, show_default=True,
              help="Worker processes for sweeps.")
@click.option("--verbose", is_flag=True, help="Debug logging on stderr and per-face homology rows in check.")
@click.pass_context
def cli(ctx, max_vertices, max_homology_vertices, max_search_nodes, workers, verbose):
    """Zero-divisor graphs of finite bounded posets and their Cohen-Macaulay certificates."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        ctx.obj = RunConfig(
            subcommand=ctx.invoked_subcommand or "",
            max_vertices=max_vertices,
            max_homology_vertices=max_homology_vertices,
            max_search_nodes=max_search_nodes,
            workers=workers,
            verbose=verbose,
        )
    except PosetCMError as e:
        raise click.UsageError(str(e))


@cli.command()
@click.argument("poset_file", type=click.Path(exists=True, dir_okay=False))
@click.pass_obj
def info(config: RunConfig, poset_file):
    """Order-theoretic summary of a poset file."""
    config.inputs = [poset_file]
    try:
        _emit(info_report(_read_poset(poset_file)))
    except PosetCMError as e:
        _fail(e)


@cli.command()
@click.argument("poset_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--dot", is_flag=True, help="Emit Graphviz DOT instead of an edge list.")
@click.option("-o", "--output", type=click.Path(dir_okay=False), help="Write to a file instead of stdout.")
@click.pass_obj
def zdg(config: RunConfig, poset_file, dot, output):
    """Zero-divisor graph of a poset file."""
    config.inputs, config.output = [poset_file], output
    try:
        P = _read_poset(poset_file)
        _emit(to_dot(zero_divisor_graph(P)) if dot else zdg_report(P), output)
    except PosetCMError as e:
        _fail(e)


@cli.command()
@click.argument("poset_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--certificate", is_flag=True, help="Also print the relabeling certificate as JSON.")
@click.pass_obj
def check(config: RunConfig, poset_file, certificate):
    """Well-coveredness and Cohen-Macaulay verdicts, cross-checked."""
    config.inputs = [poset_file]
    try:
        P = _read_poset(poset_file)
        text, code, verdict = check_report(P, config)
        _emit(text)
        if certificate and verdict.certificate is not None:
            _emit(verdict.certificate.to_json() + "\n")
    except PosetCMError as e:
        _fail(e)
    sys.exit(code)


@cli.command()
@click.argument("poset_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--dialect", type=click.Choice(DIALECTS), default="m2", show_default=True)
@click.option("-o", "--output", type=click.Path(dir_okay=False), help="Write to a file instead of stdout.")
@click.pass_obj
def export(config: RunConfig, poset_file, dialect, output):
    """Edge ideal of Γ(P) as a Macaulay2 or Singular script."""
    config.inputs, config.dialect, config.output = [poset_file], dialect, output
    try:
        G = zero_divisor_graph(_read_poset(poset_file))
        if not G.vertices:
            raise EmptyGraph("Γ(P) has no vertices, so the edge ideal has no ring")
        _emit(export_edge_ideal(G, dialect).to_text(), output)
    except PosetCMError as e:
        _fail(e)


@cli.command("sweep")
@click.argument("sizes_file", type=click.Path(exists=True, dir_okay=False))
@click.option("-o", "--output", type=click.Path(dir_okay=False), help="Write to a file instead of stdout.")
@click.pass_obj
def sweep_command(config: RunConfig, sizes_file, output):
    """Product-of-chains sweep, one TSV row per size vector."""
    config.inputs, config.output = [sizes_file], output
    try:
        vectors = parse_sizes(_read_text(sizes_file))
        rows = sweep(
            vectors,
            workers=config.workers,
            max_vertices=config.max_vertices,
            max_homology_vertices=config.max_homology_vertices,
            max_search_nodes=config.max_search_nodes,
        )
        _emit(sweep_report(rows), output)
    except PosetCMError as e:
        _fail(e)


@cli.command()
@click.argument("name", type=click.Choice(catalog_names()))
@click.argument("params", nargs=-1, type=int)
@click.option("-o", "--output", type=click.Path(dir_okay=False), help="Write to a file instead of stdout.")
@click.pass_obj
def gen(config: RunConfig, name, params, output):
    """Poset file for a catalog entry."""
    config.output = output
    try:
        P = generate(name, params)
        comment = f"{name} {' '.join(str(p) for p in params)}".strip()
        _emit(poset_to_text(P, comment=comment), output)
    except PosetCMError as e:
        _fail(e)


if __name__ == "__main__":
    cli()
