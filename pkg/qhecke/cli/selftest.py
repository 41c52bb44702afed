"""The selftest command."""

import click

from ..config import RunConfig
from ..selftest import run_selftest
from .common import domain_command


@click.command(name="selftest")
@domain_command
def selftest(config: RunConfig):
    """Run the built-in cross-route checks; exits 1 if any fails."""
    payload = run_selftest(config.arithmetic(), config.cache())
    payload["mode"] = config.arithmetic().tag
    return payload
