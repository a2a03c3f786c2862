"""Implementation of the ``example-instance`` command."""
from __future__ import annotations

from functools import partial
from pathlib import Path

import typer

from ...measure import build_example_instance
from ..common import write_or_exit


def register(app: typer.Typer) -> None:
    """Register the command with *app*."""

    @app.command("example-instance")
    def example_instance(
        kind: str = typer.Option("mixed", help="mixed|identical|linear"),
        output: Path = typer.Option("instance.json", "-o", help="Output JSON path"),
    ) -> None:
        """Write an example instance file."""

        try:
            write_or_exit(partial(build_example_instance, kind=kind), output)
        except ValueError as exc:
            raise typer.BadParameter(str(exc)) from exc
        typer.echo(f"Wrote example instance to {output}")


__all__ = ["register"]
