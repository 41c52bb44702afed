"""Shared plumbing for qhecke commands: argument types and error mapping."""

import functools
import logging

import click

from ..config import RunConfig
from ..exceptions import ConfigError, ParseError, QHeckeError
from ..tableaux import Partition, ZPartition
from ..utils.serialization import parse_int_list
from .output import DomainError, FailedReport, emit

logger = logging.getLogger(__name__)


class PartitionType(click.ParamType):
    """A partition written as "[3,1,1]"."""

    name = "partition"

    def convert(self, value, param, ctx):
        if isinstance(value, Partition):
            return value
        try:
            return Partition(tuple(parse_int_list(value)))
        except ParseError as e:
            self.fail(f"{e.message} (expected e.g. \"[3,1,1]\")", param, ctx)


class ShapeType(click.ParamType):
    """A partition, or a Z-partition such as "[2,0,-1]" when an entry is negative."""

    name = "shape"

    def convert(self, value, param, ctx):
        if isinstance(value, (Partition, ZPartition)):
            return value
        try:
            parts = tuple(parse_int_list(value))
            if parts and parts[-1] < 0:
                return ZPartition(parts)
            return Partition(parts)
        except ParseError as e:
            self.fail(f"{e.message} (expected e.g. \"[2,1]\" or \"[2,0,-1]\")", param, ctx)


PARTITION = PartitionType()
SHAPE = ShapeType()

rmatrix_option = click.option(
    "--rmatrix",
    default="builtin:dj2",
    show_default=True,
    help="builtin:djN, builtin:superM_N, or a JSON R-matrix file",
)


def domain_command(func):
    """Run a command body with the RunConfig and emit its payload.

    QHeckeError becomes a JSON error object and exit status 1; ConfigError is a
    usage error. A payload with "passed": false is emitted, then exits with 1.
    """

    @functools.wraps(func)
    def wrapper(config: RunConfig, *args, **kwargs):
        try:
            payload = func(config, *args, **kwargs)
        except ConfigError as e:
            raise click.UsageError(e.message)
        except QHeckeError as e:
            logger.error(f"{type(e).__name__}: {e.message}")
            raise DomainError(e)
        emit(config, payload)
        if payload.get("passed") is False:
            raise FailedReport(f"{func.__name__}: checks failed")

    return click.pass_obj(wrapper)
