"""Iterative refinement of the bounds through supporting-set swaps."""
from __future__ import annotations

from .base import BaseRefiner, RefineOutcome
from .config import RefineConfig, RefineMode
from .random_search import RandomRefiner, refine_random
from .registry import build_refiner, get_refiner_class, iter_modes
from .subgradient import SubgradientRefiner, project_simplex, refine_subgradient
from .support import (
    SupportSet,
    SwapDecision,
    apply_swap,
    basis_swap_test,
    brute_force_swap,
    consider_candidate,
    initial_support,
    swap_test,
)
from .trace import RefineTrace, TraceRecord

__all__ = [
    "BaseRefiner",
    "RandomRefiner",
    "RefineConfig",
    "RefineMode",
    "RefineOutcome",
    "RefineTrace",
    "SubgradientRefiner",
    "SupportSet",
    "SwapDecision",
    "TraceRecord",
    "apply_swap",
    "basis_swap_test",
    "brute_force_swap",
    "build_refiner",
    "consider_candidate",
    "get_refiner_class",
    "initial_support",
    "iter_modes",
    "project_simplex",
    "refine_random",
    "refine_subgradient",
    "swap_test",
]
