"""Implementation of the ``oracle`` command."""
from __future__ import annotations

import time
from pathlib import Path
from typing import Optional

import typer

from ...errors import DomainError
from ...io import RunReport
from ...measure import instance_digest
from ...oracle import discretize, oracle_value
from ..common import emit_report, load_or_exit, numerical_guard


def register(app: typer.Typer) -> None:
    """Register the command with *app*."""

    @app.command()
    def oracle(
        instance: Path = typer.Argument(..., help="Instance JSON file"),
        cells: int = typer.Option(400, help="Uniform cell count before breakpoint refinement"),
        alpha: Optional[str] = typer.Option(None, help="Override the claims"),
        normalize: bool = typer.Option(False, "--normalize", help="Rescale every density to total mass 1"),
        timing: bool = typer.Option(True, help="Include wall time in the report"),
    ) -> None:
        """Solve the discretized problem by linear programming."""

        inst = load_or_exit(instance, alpha, normalize)
        start = time.perf_counter()
        try:
            d = discretize(inst, cells)
        except DomainError as exc:
            raise typer.BadParameter(str(exc)) from exc
        with numerical_guard(instance):
            result = oracle_value(d)
        report = RunReport(
            digest=instance_digest(inst),
            mode="oracle",
            alpha=[float(a) for a in inst.alpha],
            iterations=result.lp.iterations,
            wall_time=time.perf_counter() - start,
            oracle_value=result.value,
            oracle_cells=cells,
        )
        emit_report(report, timing)


__all__ = ["register"]
