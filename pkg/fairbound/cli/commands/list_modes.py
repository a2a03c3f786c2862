"""Implementation of the ``list-modes`` command."""
from __future__ import annotations

import typer

from ..common import mode_descriptions


def register(app: typer.Typer) -> None:
    """Register the command with *app*."""

    @app.command("list-modes")
    def list_modes() -> None:
        """List available refinement modes."""

        for name, description in mode_descriptions().items():
            typer.echo(f"{name} - {description}")


__all__ = ["register"]
