"""Emitting command results and domain errors."""

import logging
from typing import Any, Dict, List

import click
from tabulate import tabulate

from ..config import RunConfig
from ..exceptions import QHeckeError
from ..utils.serialization import dumps

logger = logging.getLogger(__name__)

TABLE_KEYS = ("checks", "entries", "terms")


class DomainError(click.ClickException):
    """A QHeckeError surfaced by a command: the error object on stdout, exit status 1."""

    exit_code = 1

    def __init__(self, error: QHeckeError):
        super().__init__(error.message)
        self.error = error

    def show(self, file=None) -> None:
        click.echo(dumps(self.error.to_dict()))


class FailedReport(click.ClickException):
    """A report that was emitted in full but did not pass."""

    exit_code = 1

    def show(self, file=None) -> None:
        logger.error(self.message)


def _flatten(row: Dict[str, Any]) -> Dict[str, Any]:
    return {key: value if isinstance(value, (str, int, float, bool)) else dumps(value) for key, value in row.items()}


def render_table(payload: Dict[str, Any]) -> str:
    """Human-readable form: the first list of records as a grid, scalar fields above it."""
    header: List[List[Any]] = []
    records = None
    element = payload.get("element")
    if isinstance(element, dict):
        records = element.get("terms")
    for key, value in sorted(payload.items()):
        if records is None and key in TABLE_KEYS and isinstance(value, list):
            records = value
        elif isinstance(value, (str, int, float, bool)) or value is None:
            header.append([key, value])
        elif key not in ("scalar", "element"):
            header.append([key, dumps(value)])
    parts = [tabulate(header, tablefmt="plain")] if header else []
    if records:
        parts.append(tabulate([_flatten(row) for row in records], headers="keys", tablefmt="github"))
    return "\n\n".join(parts)


def emit(config: RunConfig, payload: Dict[str, Any]) -> None:
    """Write a result in the configured format to --output or stdout."""
    text = render_table(payload) if config.format == "table" else dumps(payload)
    if config.output:
        try:
            with open(config.output, "w") as f:
                f.write(text)
                f.write("\n")
        except OSError as e:
            raise click.ClickException(f"Could not write {config.output}: {str(e)}")
        logger.info(f"Wrote result to {config.output}")
    else:
        click.echo(text)
