"""Scripted experiments."""
from __future__ import annotations

from .worked_example import WorkedExampleConfig, main as worked_example_main

__all__ = ["WorkedExampleConfig", "worked_example_main"]
