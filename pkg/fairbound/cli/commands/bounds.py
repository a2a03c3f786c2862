"""Implementation of the ``bounds`` command."""
from __future__ import annotations

import time
from pathlib import Path
from typing import List, Optional, Tuple

import numpy as np
import typer

from ...bounds import BoundsResult, legut_bounds, single_evv_bounds, supporting_bounds
from ...errors import DomainError, NotNormalizedError, RankDeficientError
from ...evv import compute_evv, compute_evvs
from ...io import RunReport
from ...measure import Instance, instance_digest
from ...oracle import discretize, oracle_value
from ..common import emit_report, load_or_exit, numerical_guard, parse_vector


def _compute(inst: Instance, betas: List[str], legut: bool, single: Optional[str]) -> Tuple[str, BoundsResult]:
    alpha = inst.alpha
    if legut:
        rec = compute_evv(inst, np.full(inst.n, 1.0 / inst.n))
        return "legut", legut_bounds(inst, rec, alpha)
    if single:
        return "single", single_evv_bounds(inst, compute_evv(inst, parse_vector(single)), alpha)
    if betas:
        evvs = compute_evvs(inst, [parse_vector(b) for b in betas])
        return "bounds", supporting_bounds(evvs, alpha)
    rec = compute_evv(inst, np.full(inst.n, 1.0 / inst.n))
    if inst.is_normalized():
        return "legut", legut_bounds(inst, rec, alpha)
    return "single", single_evv_bounds(inst, rec, alpha)


def register(app: typer.Typer) -> None:
    """Register the command with *app*."""

    @app.command()
    def bounds(
        instance: Path = typer.Argument(..., help="Instance JSON file"),
        beta: List[str] = typer.Option([], "--beta", help="Weight vector, repeatable: 0.4,0.3,0.3"),
        legut: bool = typer.Option(False, "--legut", help="Legut's bounds from the uniform weight vector"),
        single: Optional[str] = typer.Option(None, "--single", help="Bounds from the EVV of one weight vector"),
        alpha: Optional[str] = typer.Option(None, help="Override the claims: 0.5,0.25,0.25"),
        normalize: bool = typer.Option(False, "--normalize", help="Rescale every density to total mass 1"),
        oracle_cells: Optional[int] = typer.Option(None, "--oracle-cells", help="Also solve the LP oracle"),
        timing: bool = typer.Option(True, help="Include wall time in the report"),
    ) -> None:
        """Bounds from the EVVs of given weight vectors."""

        inst = load_or_exit(instance, alpha, normalize)
        start = time.perf_counter()
        with numerical_guard(instance):
            try:
                mode, result = _compute(inst, beta, legut, single)
                extra = {}
                if oracle_cells:
                    value = oracle_value(discretize(inst, oracle_cells)).value
                    extra = {"oracle_value": value, "oracle_cells": oracle_cells}
            except (NotNormalizedError, DomainError, RankDeficientError) as exc:
                raise typer.BadParameter(str(exc)) from exc
        report = RunReport.from_bounds(
            instance_digest(inst),
            mode,
            inst.alpha,
            result,
            iterations=0,
            wall_time=time.perf_counter() - start,
            **extra,
        )
        emit_report(report, timing)


__all__ = ["register"]
