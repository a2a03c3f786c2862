"""Command registration helpers for :mod:`fairbound.cli`."""
from __future__ import annotations

import typer

from . import bounds, example, list_modes, oracle, plotdata, refine


def register(app: typer.Typer) -> None:
    """Register all CLI commands with *app*."""

    for module in (list_modes, example, bounds, refine, oracle, plotdata):
        module.register(app)


__all__ = ["register"]
