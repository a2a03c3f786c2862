"""Weighted maxsum partitions and efficient value vectors."""
from __future__ import annotations

from .engine import EvvRecord, compute_evv, compute_evvs, corner_evv, maxsum_value, parts_cover
from .partition import DEFAULT_ENGINE, EngineConfig, LabeledPartition, as_weights, weighted_argmax_partition

__all__ = [
    "DEFAULT_ENGINE",
    "EngineConfig",
    "EvvRecord",
    "LabeledPartition",
    "as_weights",
    "compute_evv",
    "compute_evvs",
    "corner_evv",
    "maxsum_value",
    "parts_cover",
    "weighted_argmax_partition",
]
