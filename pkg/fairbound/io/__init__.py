"""Reports and plot data."""
from __future__ import annotations

from .report import RunReport, SupportingEvv
from .tables import CURVE_POINTS, bound_series, density_frame, write_bound_series, write_density_csv

__all__ = [
    "CURVE_POINTS",
    "RunReport",
    "SupportingEvv",
    "bound_series",
    "density_frame",
    "write_bound_series",
    "write_density_csv",
]
