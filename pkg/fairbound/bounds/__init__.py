"""Two-sided bounds on the alpha-optimal partition value."""
from __future__ import annotations

from .core import (
    SANDWICH_TOL,
    BoundsResult,
    ConeReport,
    ConeSolution,
    ConeStatus,
    EvvBasis,
    assemble_basis,
    bounds_from_basis,
    cone_membership,
    lower_bound,
    solve_cone_system,
    supporting_bounds,
    uncertified_value,
    upper_bound,
    upper_ratio,
)
from .closed_form import legut_bounds, single_evv_bounds
from .linalg import EPS_DET, EPS_RANK, scaled_det, select_basis_rows

__all__ = [
    "EPS_DET",
    "EPS_RANK",
    "SANDWICH_TOL",
    "BoundsResult",
    "ConeReport",
    "ConeSolution",
    "ConeStatus",
    "EvvBasis",
    "assemble_basis",
    "bounds_from_basis",
    "cone_membership",
    "legut_bounds",
    "lower_bound",
    "scaled_det",
    "select_basis_rows",
    "single_evv_bounds",
    "solve_cone_system",
    "supporting_bounds",
    "uncertified_value",
    "upper_bound",
    "upper_ratio",
]
