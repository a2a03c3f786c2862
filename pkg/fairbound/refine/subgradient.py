"""Projected subgradient descent on the upper-bound ratio.

The ratio ``(beta . u) / (beta . alpha)`` is minimized over the floored
simplex with the diminishing step ``c / sqrt(t)``; its subgradient at ``beta``
is ``(u - ratio * alpha) / (beta . alpha)``.  Every iterate's EVV is also
offered to the swap test, so the lower bound climbs along the way.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence, Tuple

import numpy as np

from ..bounds import BoundsResult, upper_ratio
from ..evv import EvvRecord
from ..measure import Instance
from ..utils.logging import fmt, logger
from .base import BaseRefiner, RefineOutcome
from .config import RefineConfig, RefineMode
from .support import SupportSet
from .trace import RefineTrace


def project_simplex(v: Sequence[float], floor: float = 0.0) -> np.ndarray:
    """Euclidean projection onto ``{x : sum(x) = 1, x_i >= floor}``."""

    y = np.asarray(v, dtype=float)
    total = 1.0 - y.size * floor
    if total <= 0.0:
        raise ValueError(f"floor {floor} too large for {y.size} components")
    shifted = y - floor
    ordered = np.sort(shifted)[::-1]
    thresholds = (np.cumsum(ordered) - total) / np.arange(1, y.size + 1)
    k = np.nonzero(ordered > thresholds)[0][-1]
    return floor + np.maximum(shifted - thresholds[k], 0.0)


def subgradient(rec: EvvRecord, alpha: np.ndarray) -> np.ndarray:
    ratio = upper_ratio(rec, alpha)
    return (rec.u - ratio * alpha) / float(np.dot(rec.beta, alpha))


@dataclass
class SubgradientRefiner(BaseRefiner):
    """Starts from the uniform weight vector and stops once the gap closes."""

    config: RefineConfig = field(default_factory=lambda: RefineConfig(mode=RefineMode.SUBGRADIENT, max_iter=200))
    name: str = "subgradient"

    def should_stop(self, support: SupportSet) -> bool:
        return support.gap <= self.config.gap_tol

    def propose(self, inst: Instance, alpha: np.ndarray, first: EvvRecord) -> Iterator[np.ndarray]:
        self.config.check_floor(inst.n)
        beta, rec = first.beta, first
        t = 0
        while True:
            t += 1
            gamma = self.config.step / math.sqrt(t)
            beta = project_simplex(beta - gamma * subgradient(rec, alpha), self.config.floor)
            rec = yield beta

    def run(self, inst: Instance, alpha: Sequence[float]) -> RefineOutcome:
        outcome = super().run(inst, alpha)
        if not outcome.gap_met:
            logger.warning(
                "gap %s above tolerance %s after %d iterations",
                fmt(outcome.result.gap),
                fmt(self.config.gap_tol),
                outcome.iterations,
            )
        return outcome


def refine_subgradient(
    inst: Instance, alpha: Sequence[float], config: Optional[RefineConfig] = None
) -> Tuple[BoundsResult, RefineTrace]:
    """Run the subgradient loop; ``trace.gap_met`` tells whether it converged."""

    cfg = config or RefineConfig(mode=RefineMode.SUBGRADIENT, max_iter=200)
    outcome = SubgradientRefiner(cfg).run(inst, alpha)
    return outcome.result, outcome.trace


__all__ = ["SubgradientRefiner", "project_simplex", "refine_subgradient", "subgradient"]
