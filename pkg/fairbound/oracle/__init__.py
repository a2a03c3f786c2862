"""Linear programming ground truth on a discretized cake."""
from __future__ import annotations

from .discretize import DiscretizedInstance, discretize
from .simplex import LPSolution, solve_standard_form
from .value import OracleResult, oracle_maxsum, oracle_value, sandwich_slack

__all__ = [
    "DiscretizedInstance",
    "LPSolution",
    "OracleResult",
    "discretize",
    "oracle_maxsum",
    "oracle_value",
    "sandwich_slack",
    "solve_standard_form",
]
