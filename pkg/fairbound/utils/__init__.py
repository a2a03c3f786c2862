"""Utility helpers for :mod:`fairbound`."""
from __future__ import annotations

from .logging import fmt, logger, setup_logging
from .threads import worker_count

__all__ = ["fmt", "logger", "setup_logging", "worker_count"]
