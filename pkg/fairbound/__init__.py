"""Top level package for fairbound.

Guaranteed two-sided bounds on the alpha-optimal value of dividing the unit
interval among agents with piecewise polynomial densities.
"""
from __future__ import annotations

from .bounds import BoundsResult, legut_bounds, single_evv_bounds, supporting_bounds
from .evv import EvvRecord, compute_evv
from .experiments import WorkedExampleConfig, worked_example_main
from .measure import Instance, load_instance
from .oracle import discretize, oracle_value
from .refine import RefineConfig, refine_random, refine_subgradient

__all__ = [
    "__version__",
    "BoundsResult",
    "EvvRecord",
    "Instance",
    "RefineConfig",
    "WorkedExampleConfig",
    "compute_evv",
    "discretize",
    "legut_bounds",
    "load_instance",
    "oracle_value",
    "refine_random",
    "refine_subgradient",
    "single_evv_bounds",
    "supporting_bounds",
    "worked_example_main",
]

__version__ = "0.1.0"
