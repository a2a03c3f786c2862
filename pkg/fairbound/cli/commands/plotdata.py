"""Implementation of the ``plotdata`` command."""
from __future__ import annotations

from functools import partial
from pathlib import Path
from typing import Optional

import typer

from ...io import CURVE_POINTS, write_bound_series, write_density_csv
from ...refine import RefineTrace
from ..common import EXIT_INVALID, load_or_exit, write_or_exit


def register(app: typer.Typer) -> None:
    """Register the command with *app*."""

    @app.command()
    def plotdata(
        instance: Path = typer.Argument(..., help="Instance JSON file"),
        out: Path = typer.Option(Path("plotdata"), help="Output directory"),
        trace: Optional[Path] = typer.Option(None, help="Trace CSV from refine --trace"),
        points: int = typer.Option(CURVE_POINTS, help="Samples per density curve"),
    ) -> None:
        """Write density curves and, given a trace, the bound series as CSV."""

        inst = load_or_exit(instance)
        write_or_exit(partial(write_density_csv, inst, points=points), out / "densities.csv")
        if trace:
            try:
                series = RefineTrace.read_csv(trace)
            except (OSError, KeyError, ValueError) as exc:
                typer.echo(f"cannot read trace {trace}: {exc}", err=True)
                raise typer.Exit(EXIT_INVALID) from exc
            write_or_exit(partial(write_bound_series, series), out / "bounds.csv")
        typer.echo(f"Wrote plot data to {out}")


__all__ = ["register"]
