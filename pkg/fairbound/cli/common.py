"""Shared helpers for CLI commands."""
from __future__ import annotations

from contextlib import contextmanager
from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, Iterator, List, Optional, Type

import numpy as np
import typer

from ..errors import InstanceValidationError, NumericalInconsistencyError, OracleError
from ..io import RunReport
from ..measure import Instance, load_instance, normalize_instance
from ..refine import BaseRefiner, iter_modes
from ..utils.logging import fmt, logger

EXIT_INVALID = 2
EXIT_IO = 3


def mode_descriptions() -> Dict[str, str]:
    """Return a mapping of refinement mode names to descriptions."""

    return {name: description for name, _cls, description in iter_modes()}


def resolve_mode(name: str) -> Type[BaseRefiner]:
    for registered, cls, _description in iter_modes():
        if registered == name:
            return cls
    raise typer.BadParameter(f"Unknown mode '{name}'")


def parse_vector(text: str) -> np.ndarray:
    """Parse ``"0.4,0.3,0.3"`` or ``"1/3,1/3,1/3"``."""

    try:
        return np.array([float(Fraction(part.strip())) for part in text.split(",") if part.strip()])
    except (ValueError, ZeroDivisionError) as exc:
        raise typer.BadParameter(f"cannot parse vector '{text}'") from exc


def load_or_exit(path: Path, alpha: Optional[str] = None, normalize: bool = False) -> Instance:
    """Load an instance, exiting with code 2 and the violation list when invalid."""

    try:
        inst = load_instance(path)
        if normalize:
            inst = normalize_instance(inst)
        if alpha:
            inst = inst.with_claims(parse_vector(alpha))
    except InstanceValidationError as exc:
        typer.echo(f"invalid instance {path}:", err=True)
        for violation in exc.violations:
            typer.echo(f"  {violation}", err=True)
        raise typer.Exit(EXIT_INVALID) from exc
    except OSError as exc:
        typer.echo(f"cannot read {path}: {exc}", err=True)
        raise typer.Exit(EXIT_INVALID) from exc
    return inst


@contextmanager
def numerical_guard(path: Path) -> Iterator[None]:
    """Exit with code 2 when the computation on ``path`` fails a numerical check."""

    try:
        yield
    except (OracleError, NumericalInconsistencyError) as exc:
        typer.echo(f"numerical failure on {path}: {exc}", err=True)
        raise typer.Exit(EXIT_INVALID) from exc


def write_or_exit(write: Callable[[Path], None], path: Path) -> None:
    try:
        write(path)
    except OSError as exc:
        typer.echo(f"cannot write {path}: {exc}", err=True)
        raise typer.Exit(EXIT_IO) from exc


def emit_report(report: RunReport, timing: bool = True) -> None:
    """Report to stdout at full precision; the summary goes to the log."""

    parts: List[str] = [report.mode]
    if report.lower is not None:
        parts.append(f"lower={fmt(report.lower)}")
    if report.upper is not None:
        parts.append(f"upper={fmt(report.upper)}")
    if report.cone_status:
        parts.append(f"cone={report.cone_status}")
    if report.uncertified_r is not None:
        parts.append(f"uncertified_r={fmt(report.uncertified_r)}")
    if report.oracle_value is not None:
        parts.append(f"oracle={fmt(report.oracle_value)}")
    logger.info(" ".join(parts))
    typer.echo(report.to_json(timing))


__all__ = [
    "EXIT_INVALID",
    "EXIT_IO",
    "emit_report",
    "load_or_exit",
    "mode_descriptions",
    "numerical_guard",
    "parse_vector",
    "resolve_mode",
    "write_or_exit",
]
