"""Implementation of the ``refine`` command."""
from __future__ import annotations

from pathlib import Path
from typing import Optional

import typer

from ...io import RunReport
from ...measure import instance_digest
from ...errors import DomainError
from ...oracle import discretize, oracle_value
from ...refine import RefineConfig
from ..common import emit_report, load_or_exit, numerical_guard, resolve_mode, write_or_exit

DEFAULT_ITERS = {"random": 1000, "subgradient": 200}


def register(app: typer.Typer) -> None:
    """Register the command with *app*."""

    @app.command()
    def refine(
        instance: Path = typer.Argument(..., help="Instance JSON file"),
        mode: str = typer.Option("random", help="Refinement mode, see list-modes"),
        iters: Optional[int] = typer.Option(None, help="Iterations (default 1000 random, 200 subgradient)"),
        seed: int = typer.Option(0, help="Seed of the random mode"),
        step: float = typer.Option(0.5, help="Step constant c of c/sqrt(t)"),
        gap_tol: float = typer.Option(1e-3, "--gap", "--gap-tol", help="Stop the subgradient loop below this gap"),
        alpha: Optional[str] = typer.Option(None, help="Override the claims"),
        normalize: bool = typer.Option(False, "--normalize", help="Rescale every density to total mass 1"),
        trace: Optional[Path] = typer.Option(None, help="Write the per-iteration trace CSV"),
        oracle_cells: Optional[int] = typer.Option(None, "--oracle-cells", help="Also solve the LP oracle"),
        progress: bool = typer.Option(False, help="Show a progress bar"),
        timing: bool = typer.Option(True, help="Include wall time in the report"),
    ) -> None:
        """Refine the bounds by swapping supporting EVVs."""

        refiner_cls = resolve_mode(mode)
        count = DEFAULT_ITERS[mode] if iters is None else iters
        try:
            config = RefineConfig(
                mode=mode, max_iter=count, seed=seed, step=step, gap_tol=gap_tol, progress=progress
            )
        except ValueError as exc:
            raise typer.BadParameter(str(exc)) from exc
        inst = load_or_exit(instance, alpha, normalize)
        with numerical_guard(instance):
            try:
                outcome = refiner_cls(config).run(inst, inst.alpha)
            except ValueError as exc:
                raise typer.BadParameter(str(exc)) from exc
        if trace:
            write_or_exit(outcome.trace.write_csv, trace)
        extra = {}
        if oracle_cells:
            with numerical_guard(instance):
                try:
                    value = oracle_value(discretize(inst, oracle_cells)).value
                except DomainError as exc:
                    raise typer.BadParameter(str(exc)) from exc
            extra = {"oracle_value": value, "oracle_cells": oracle_cells}
        report = RunReport.from_bounds(
            instance_digest(inst),
            mode,
            inst.alpha,
            outcome.result,
            iterations=outcome.iterations,
            wall_time=outcome.wall_time,
            gap_met=outcome.gap_met,
            **extra,
        )
        emit_report(report, timing)


__all__ = ["register"]
