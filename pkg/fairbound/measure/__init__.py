"""Measures on the unit interval given by piecewise polynomial densities."""
from __future__ import annotations

from .examples import build_example_instance, identical_instance, linear_instance, mixed_instance
from .io import instance_digest, instance_to_dict, write_instance
from .loaders import load_instance, normalize_instance, validate_instance
from .models import DensityFunction, Instance, IntervalSet, Piece, eval_density, measure_of, total_mass

__all__ = [
    "DensityFunction",
    "Instance",
    "IntervalSet",
    "Piece",
    "build_example_instance",
    "eval_density",
    "identical_instance",
    "instance_digest",
    "instance_to_dict",
    "linear_instance",
    "load_instance",
    "measure_of",
    "mixed_instance",
    "normalize_instance",
    "total_mass",
    "validate_instance",
    "write_instance",
]
