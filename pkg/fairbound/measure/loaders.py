"""Validate instance descriptions and load them from JSON files."""
from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Any, List, Mapping, Optional

import numpy as np

from ..errors import InstanceValidationError, Violation
from .models import DensityFunction, Instance, Piece

GRID_POINTS = 1024
_COVER_TOL = 1e-12
_NEG_TOL = 1e-12
_CLAIM_TOL = 1e-9


def _finite_numbers(values: Any) -> Optional[List[float]]:
    if isinstance(values, np.ndarray):
        values = values.tolist() if values.ndim == 1 else None
    if not isinstance(values, (list, tuple)) or not values:
        return None
    try:
        out = [float(v) for v in values]
    except (TypeError, ValueError):
        return None
    if not all(math.isfinite(v) for v in out):
        return None
    return out


def check_claims(claims: Any, n: int) -> List[Violation]:
    """Return the violations of ``alpha in int Delta_{n-1}``."""

    values = _finite_numbers(claims)
    if values is None:
        return [Violation(None, None, "claims must be a non-empty list of finite numbers")]
    violations: List[Violation] = []
    if len(values) != n:
        violations.append(Violation(None, None, f"expected {n} claims, got {len(values)}"))
    for i, value in enumerate(values):
        if value <= 0.0:
            violations.append(Violation(i, None, f"claim {value} is not strictly positive (claim not interior)"))
    if abs(sum(values) - 1.0) > _CLAIM_TOL:
        violations.append(Violation(None, None, f"claims sum to {sum(values)}, expected 1"))
    return violations


def _check_agent(index: int, raw: Any, violations: List[Violation]) -> Optional[DensityFunction]:
    if not isinstance(raw, Mapping):
        violations.append(Violation(index, None, "agent entry must be an object"))
        return None
    name = str(raw.get("name", f"agent{index + 1}"))
    raw_pieces = raw.get("pieces")
    if not isinstance(raw_pieces, (list, tuple)) or not raw_pieces:
        violations.append(Violation(index, None, "agent has no pieces"))
        return None

    pieces: List[Piece] = []
    ok = True
    for k, item in enumerate(raw_pieces):
        if not isinstance(item, Mapping):
            violations.append(Violation(index, k, "piece must be an object"))
            ok = False
            continue
        interval = _finite_numbers(item.get("interval"))
        coeffs = _finite_numbers(item.get("coeffs"))
        if interval is None or len(interval) != 2:
            violations.append(Violation(index, k, "interval must be two finite numbers [a, b]"))
            ok = False
            continue
        if coeffs is None:
            violations.append(Violation(index, k, "coeffs must be a non-empty list of finite numbers"))
            ok = False
            continue
        a, b = interval
        if not a < b:
            violations.append(Violation(index, k, f"empty or reversed interval [{a}, {b}]"))
            ok = False
            continue
        pieces.append(Piece(a, b, tuple(coeffs)))
    if not ok:
        return None

    if abs(pieces[0].start) > _COVER_TOL:
        violations.append(Violation(index, 0, f"pieces start at {pieces[0].start}, not 0 (gap)"))
        ok = False
    if abs(pieces[-1].end - 1.0) > _COVER_TOL:
        violations.append(Violation(index, len(pieces) - 1, f"pieces end at {pieces[-1].end}, not 1 (gap)"))
        ok = False
    for k in range(1, len(pieces)):
        prev, cur = pieces[k - 1], pieces[k]
        if cur.start > prev.end + _COVER_TOL:
            violations.append(Violation(index, k, f"gap between {prev.end} and {cur.start}"))
            ok = False
        elif cur.start < prev.end - _COVER_TOL:
            violations.append(Violation(index, k, f"overlap: piece starts at {cur.start} before {prev.end}"))
            ok = False
    if not ok:
        return None

    # snap boundaries so that the pieces tile [0, 1] exactly
    snapped = []
    for k, piece in enumerate(pieces):
        start = 0.0 if k == 0 else snapped[-1].end
        end = 1.0 if k == len(pieces) - 1 else piece.end
        snapped.append(Piece(start, end, piece.coeffs))

    for k, piece in enumerate(snapped):
        grid = np.concatenate((np.linspace(piece.start, piece.end, GRID_POINTS), [piece.start, piece.end]))
        values = piece(grid)
        worst = int(np.argmin(values))
        if values[worst] < -_NEG_TOL:
            violations.append(
                Violation(index, k, f"negative density {values[worst]:.6g} at x={grid[worst]:.6g}")
            )
            ok = False
    if not ok:
        return None

    density = DensityFunction(name, tuple(snapped))
    if not density.total_mass > 0.0:
        violations.append(Violation(index, None, f"total mass {density.total_mass} is not positive"))
        return None
    return density


def validate_instance(raw: Any) -> Instance:
    """Check a raw instance description and return an :class:`Instance`.

    All violations are collected and raised together in an
    :class:`~fairbound.errors.InstanceValidationError`.
    """

    if not isinstance(raw, Mapping):
        raise InstanceValidationError([Violation(None, None, "instance must be a JSON object")])
    agents = raw.get("agents")
    if not isinstance(agents, (list, tuple)):
        raise InstanceValidationError([Violation(None, None, "missing 'agents' list")])

    violations: List[Violation] = []
    n = len(agents)
    if n < 2:
        violations.append(Violation(None, None, f"at least two agents are required, got {n}"))
    densities = [_check_agent(i, agent, violations) for i, agent in enumerate(agents)]
    violations.extend(check_claims(raw.get("claims"), n))
    if violations:
        raise InstanceValidationError(violations)
    claims = tuple(float(c) for c in raw["claims"])
    return Instance(tuple(d for d in densities if d is not None), claims)


def load_instance(path: Path) -> Instance:
    """Read and validate an instance JSON file."""

    text = path.read_text(encoding="utf-8")
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceValidationError([Violation(None, None, f"not valid JSON: {exc}")]) from exc
    return validate_instance(raw)


def normalize_instance(inst: Instance) -> Instance:
    """Rescale every density to a probability density."""

    densities = tuple(f.scaled(1.0 / f.total_mass) for f in inst.densities)
    return Instance(densities, inst.claims)


__all__ = ["GRID_POINTS", "check_claims", "load_instance", "normalize_instance", "validate_instance"]
