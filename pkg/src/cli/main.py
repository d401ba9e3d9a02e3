"""
realgeom CLI

Command-line interface for the exact real algebraic geometry engines.

Usage:
    realgeom topology     Topology of a plane curve
    realgeom intersect    Real intersection of three quadrics
    realgeom cad          Cylindrical decomposition of one to three quadrics
    realgeom betti        Betti numbers b0, b1 of a union of ellipsoids
    realgeom examples     List or print the built-in inputs

Exit codes: 0 success, 2 refused or malformed input, 1 internal error.
"""

import functools
import logging
import sys
from typing import Callable, List, Optional

import click
from rich.console import Console
from rich.table import Table

from src import __version__
from src.arith.parser import poly_parse, read_polynomial_lines, split_polynomial_lines
from src.cad.adjacency import adjacency_01
from src.cad.betti import betti01
from src.cad.components import components
from src.cad.decomposition import cad_quadrics
from src.cad.objects import Region, parse_object_line
from src.core.catalog import CATALOG, catalog_entry, catalog_names
from src.core.config import EngineConfig, load_config
from src.core.errors import (
    DegreeError,
    PolynomialSyntaxError,
    RealGeomError,
    RefusedInputError,
    RegionSyntaxError,
)
from src.quadrics.engine import intersect_three_quadrics
from src.roots import algebraic
from src.topology.top import top
from src.utils import export
from src.utils.logs import level_for, setup_logging

logger = logging.getLogger(__name__)

console = Console()
errors = Console(stderr=True)

REFUSALS = (RefusedInputError, PolynomialSyntaxError, RegionSyntaxError, DegreeError)


def _guarded(command: Callable) -> Callable:
    """Map refusals to exit code 2 and every other failure to exit code 1"""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except click.ClickException:
            raise
        except REFUSALS as e:
            errors.print(f"[red]refused:[/red] {e}")
            sys.exit(2)
        except RealGeomError as e:
            errors.print(f"[red]error:[/red] {e}")
            sys.exit(1)
        except Exception as e:
            logger.debug("Unexpected failure", exc_info=True)
            errors.print(f"[red]internal error:[/red] {e}")
            sys.exit(1)

    return wrapper


def _output_options(command: Callable) -> Callable:
    command = click.option(
        "--precision", type=click.IntRange(min=1), default=None,
        help="Significant digits of decimal output (default from config, 15)",
    )(command)
    command = click.option(
        "--format", "fmt", type=click.Choice(["json", "dot", "text"]), default="json",
        show_default=True, help="Output format",
    )(command)
    command = click.option(
        "--example", "example", default=None, help="Read a built-in input instead of a file",
    )(command)
    command = click.argument(
        "input_path", required=False, type=click.Path(exists=True, dir_okay=False),
    )(command)
    return command


def _input_lines(input_path: Optional[str], example: Optional[str]) -> List[str]:
    if example is not None:
        if input_path is not None:
            raise click.UsageError("give either an input file or --example, not both")
        try:
            return split_polynomial_lines(catalog_entry(example).text)
        except KeyError as e:
            raise click.BadParameter(str(e.args[0]), param_hint="--example")
    if input_path is None:
        raise click.UsageError("an input file or --example is required")
    return read_polynomial_lines(input_path)


def _precision(config: EngineConfig, precision: Optional[int]) -> int:
    return precision if precision is not None else config.precision


@click.group()
@click.version_option(version=__version__)
@click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None,
              help="YAML configuration file (default ./realgeom.yaml when present)")
@click.option("--verbose", "-v", count=True, help="More log output on stderr (repeatable)")
@click.pass_context
def cli(ctx, config_path, verbose):
    """
    realgeom - exact topology of curves, quadric intersections and Betti numbers
    """
    try:
        config = load_config(config_path)
    except (OSError, ValueError) as e:
        raise click.UsageError(f"configuration: {e}")
    setup_logging(level_for(verbose, config.log_level))
    algebraic.set_refinement_limit(config.refinement_limit)
    ctx.obj = config


@cli.command()
@_output_options
@click.pass_obj
@_guarded
def topology(config, input_path, example, fmt, precision):
    """Topology of the plane curve on the first line of INPUT_PATH"""
    lines = _input_lines(input_path, example)
    if not lines:
        raise click.UsageError("the input holds no polynomial")
    digits = _precision(config, precision)
    result = top(poly_parse(lines[0]), config.shear_budget)
    if fmt == "json":
        click.echo(export.to_json(export.topology_to_dict(result, digits)))
    elif fmt == "dot":
        click.echo(export.topology_to_dot(result, digits))
    else:
        console.print(export.topology_table(result, digits))


@cli.command()
@_output_options
@click.option("--dump-projection", is_flag=True, help="Also print the projection polynomials")
@click.pass_obj
@_guarded
def intersect(config, input_path, example, fmt, precision, dump_projection):
    """Real intersection of the three quadrics in INPUT_PATH"""
    lines = _input_lines(input_path, example)
    if len(lines) != 3:
        raise click.UsageError(f"expected three quadrics, found {len(lines)} lines")
    digits = _precision(config, precision)
    result = intersect_three_quadrics(*[poly_parse(line) for line in lines],
                                      budget=config.shear_budget)
    dump = result.projection.dump_lines() if dump_projection else []
    if fmt == "json":
        data = export.intersection_to_dict(result, digits)
        if dump_projection:
            data["projection"] = dump
        click.echo(export.to_json(data))
        return
    if fmt == "dot":
        click.echo(export.intersection_to_dot(result, digits))
    else:
        console.print(export.intersection_table(result, digits))
    for line in dump:
        click.echo(line)


@cli.command()
@_output_options
@click.option("--region", default=None, help="Region formula, e.g. '1=0,2<=0 | 3=0'")
@click.pass_obj
@_guarded
def cad(config, input_path, example, fmt, precision, region):
    """Cylindrical decomposition adapted to the one to three quadrics in INPUT_PATH"""
    lines = _input_lines(input_path, example)
    if not 1 <= len(lines) <= 3:
        raise click.UsageError(f"expected one to three quadrics, found {len(lines)} lines")
    digits = _precision(config, precision)
    formula = Region.parse(region, len(lines)) if region is not None else None
    decomposition = cad_quadrics([poly_parse(line) for line in lines],
                                 budget=config.shear_budget)
    truth, adjacency, found = None, [], []
    if formula is not None:
        truth = decomposition.truth(formula)
        adjacency = adjacency_01(decomposition, formula)
        found = components(decomposition, formula)
    if fmt == "json":
        click.echo(export.to_json(
            export.cad_to_dict(decomposition, digits, truth, adjacency, found)
        ))
    elif fmt == "dot":
        if region is None:
            raise click.UsageError("dot output needs --region")
        click.echo(export.cad_to_dot(decomposition, adjacency, found))
    else:
        for table in export.cad_tables(decomposition, digits, truth):
            console.print(table)
        if region is not None:
            console.print(f"Region {region}: {len(found)} component(s)")


@cli.command()
@_output_options
@click.option("--jobs", type=click.IntRange(min=0), default=None,
              help="Worker processes (0 = one per CPU, 1 = sequential)")
@click.option("--dump-matrices", is_flag=True, help="Also print A and B as integer grids")
@click.pass_obj
@_guarded
def betti(config, input_path, example, fmt, precision, jobs, dump_matrices):
    """Betti numbers b0 and b1 of the union of the objects in INPUT_PATH"""
    lines = _input_lines(input_path, example)
    if not lines:
        raise click.UsageError("the input holds no object")
    objects = [
        parse_object_line(line, i, config.admit_definite_quadrics) for i, line in enumerate(lines)
    ]
    workers = jobs if jobs is not None else config.jobs
    result = betti01(objects, jobs=workers, budget=config.shear_budget)
    grids = [result.matrix_a.to_grid("A"), result.matrix_b.to_grid("B")] if dump_matrices else []
    if fmt == "json":
        data = result.to_dict()
        if dump_matrices:
            data["matrices"] = grids
        click.echo(export.to_json(data))
        return
    if fmt == "dot":
        click.echo(export.betti_to_dot(result))
    else:
        console.print(export.betti_table(result))
    for grid in grids:
        click.echo(grid)


@cli.command()
@click.argument("name", required=False)
@click.option("--command", "command", default=None,
              type=click.Choice(["topology", "intersect", "cad", "betti"]),
              help="Only list inputs of one subcommand")
def examples(name, command):
    """List the built-in inputs, or print one in the input-file format"""
    if name is not None:
        try:
            click.echo(catalog_entry(name).text, nl=False)
        except KeyError as e:
            raise click.BadParameter(str(e.args[0]), param_hint="NAME")
        return
    table = Table(title="Built-in examples")
    table.add_column("name")
    table.add_column("command")
    table.add_column("description")
    for key in catalog_names(command):
        entry = CATALOG[key]
        table.add_row(entry.name, entry.command, entry.description)
    console.print(table)


def main():
    """Main entry point"""
    cli()


if __name__ == "__main__":
    main()
