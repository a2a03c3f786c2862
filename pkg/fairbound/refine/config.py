"""Configuration of the refinement loops."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from ..evv import DEFAULT_ENGINE, EngineConfig


class RefineMode(str, Enum):
    RANDOM = "random"
    SUBGRADIENT = "subgradient"


@dataclass
class RefineConfig:
    """Knobs shared by the random and subgradient loops.

    ``max_iter`` is the sample count in random mode.  ``step`` is the constant
    ``c`` of the step schedule ``c / sqrt(t)``; ``0`` freezes ``beta``.
    ``floor`` keeps subgradient iterates away from the simplex boundary.
    """

    mode: RefineMode = RefineMode.RANDOM
    max_iter: int = 1000
    seed: Optional[int] = 0
    step: float = 0.5
    floor: float = 1e-6
    gap_tol: float = 1e-3
    progress: bool = False
    engine: EngineConfig = field(default_factory=lambda: DEFAULT_ENGINE)

    def __post_init__(self) -> None:
        self.mode = RefineMode(self.mode)
        if self.max_iter < 0:
            raise ValueError("max_iter must be non-negative")
        if self.mode is RefineMode.SUBGRADIENT and self.max_iter < 1:
            raise ValueError("subgradient mode needs max_iter >= 1")
        if self.step < 0:
            raise ValueError("step must be non-negative")
        if not self.floor > 0:
            raise ValueError("floor must be positive")
        if self.gap_tol < 0:
            raise ValueError("gap_tol must be non-negative")

    def check_floor(self, n: int) -> None:
        if not self.floor < 1.0 / n:
            raise ValueError(f"floor {self.floor} must be below 1/n = {1.0 / n}")


__all__ = ["RefineConfig", "RefineMode"]
