"""CSV plot data: density curves and bound series."""
from __future__ import annotations

from pathlib import Path

import numpy as np
import pandas as pd

from ..measure import Instance
from ..refine import RefineTrace

CURVE_POINTS = 512


def density_frame(inst: Instance, points: int = CURVE_POINTS) -> pd.DataFrame:
    """Samples ``(x, f_1(x), ..., f_n(x))`` on a uniform grid of ``[0, 1]``."""

    x = np.linspace(0.0, 1.0, points)
    data = {"x": x}
    for i, f in enumerate(inst.densities):
        data[f"f_{i + 1}"] = f(x)
    return pd.DataFrame(data)


def bound_series(trace: RefineTrace) -> pd.DataFrame:
    return trace.to_frame()[["iteration", "lower", "upper"]]


def write_density_csv(inst: Instance, path: Path, points: int = CURVE_POINTS) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    density_frame(inst, points).to_csv(path, index=False, float_format="%.17g")


def write_bound_series(trace: RefineTrace, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    bound_series(trace).to_csv(path, index=False, float_format="%.17g")


__all__ = ["CURVE_POINTS", "bound_series", "density_frame", "write_bound_series", "write_density_csv"]
