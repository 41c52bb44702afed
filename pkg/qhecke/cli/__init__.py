"""Command-line interface for qhecke."""

import logging
import sys

import click

from ..config import CACHE_ENV_VAR, resolve_config
from ..exceptions import ConfigError
from .algebra import central, idempotent, trace
from .dimensions import fuse, qdim
from .selftest import selftest
from .symmetry import certify, integral, rank

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


@click.group()
@click.option("--mode", type=click.Choice(["exact", "numeric"]), default=None, help="Coefficient arithmetic")
@click.option("--v0", default=None, help="Evaluation point for numeric mode, e.g. 3/2")
@click.option("--max-degree", type=int, default=None, help="Largest Hecke algebra degree")
@click.option("--max-tensor-entries", type=int, default=None, help="Cap on d^(2n) for operators on V^n")
@click.option("--cache-dir", envvar=CACHE_ENV_VAR, default=None, help="Idempotent cache directory")
@click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None, help="YAML settings file")
@click.option("--format", "output_format", type=click.Choice(["json", "table"]), default=None)
@click.option("--output", type=click.Path(dir_okay=False), default=None, help="Write the result here")
@click.option("--rank-cutoff", type=int, default=None, help="Largest exterior power examined")
@click.option(
    "--log-level", type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False), default=None
)
@click.pass_context
def cli(ctx, mode, v0, max_degree, max_tensor_entries, cache_dir, config_path, output_format, output, rank_cutoff, log_level):
    """Exact Hecke algebra and quantum group computations."""
    overrides = {
        "mode": mode,
        "v0": v0,
        "max_degree": max_degree,
        "max_tensor_entries": max_tensor_entries,
        "cache_dir": cache_dir,
        "format": output_format,
        "output": output,
        "rank_cutoff": rank_cutoff,
        "log_level": log_level,
    }
    try:
        config = resolve_config(config_path, overrides)
    except ConfigError as e:
        raise click.UsageError(e.message, ctx)
    logging.basicConfig(level=config.log_level, format=LOG_FORMAT, stream=sys.stderr)
    logging.getLogger("qhecke").setLevel(config.log_level)
    ctx.obj = config


cli.add_command(idempotent)
cli.add_command(central)
cli.add_command(trace)
cli.add_command(qdim)
cli.add_command(fuse)
cli.add_command(certify)
cli.add_command(rank)
cli.add_command(integral)
cli.add_command(selftest)
