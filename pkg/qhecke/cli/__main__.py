"""Main entry point for the CLI."""

from . import cli

if __name__ == "__main__":
    cli()
