"""Base refiner definition.

Refiners sample weight vectors, feed their EVVs to the support set and
record every step.  Subclasses implement :meth:`propose`.
"""
from __future__ import annotations

import time
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np
from tqdm import tqdm

from ..bounds import BoundsResult
from ..evv import EvvRecord, compute_evv
from ..measure import Instance
from ..utils.logging import fmt, logger
from .config import RefineConfig
from .support import SupportSet, consider_candidate, initial_support
from .trace import RefineTrace


@dataclass
class RefineOutcome:
    result: BoundsResult
    trace: RefineTrace
    support: SupportSet
    wall_time: float

    @property
    def iterations(self) -> int:
        return self.trace.iterations

    @property
    def gap_met(self) -> bool:
        return bool(self.trace.gap_met)


class BaseRefiner(ABC):
    """Abstract refinement loop."""

    name: str = "base"
    config: RefineConfig

    @abstractmethod
    def propose(self, inst: Instance, alpha: np.ndarray, first: EvvRecord) -> Iterator[np.ndarray]:
        """Yield weight vectors; ``send`` passes back the EVV of each one."""

    def should_stop(self, support: SupportSet) -> bool:
        return False

    def run(self, inst: Instance, alpha: Sequence[float]) -> RefineOutcome:
        cfg = self.config
        a = np.asarray(alpha, dtype=float)
        start = time.perf_counter()
        support, uniform, decision = initial_support(inst, a, cfg.engine)
        trace = RefineTrace()
        trace.append(0, uniform.beta, uniform.u, decision.index, support.lower, support.upper, "init")

        proposals = self.propose(inst, a, uniform)
        beta = next(proposals, None)
        bar = tqdm(total=cfg.max_iter, desc=self.name, disable=not cfg.progress)
        iteration = 0
        while beta is not None and iteration < cfg.max_iter and not self.should_stop(support):
            iteration += 1
            rec = compute_evv(inst, beta, cfg.engine)
            support, decision, note = consider_candidate(support, rec, a)
            trace.append(iteration, rec.beta, rec.u, decision.index, support.lower, support.upper, note)
            bar.update(1)
            try:
                beta = proposals.send(rec)
            except StopIteration:
                beta = None
        bar.close()

        trace.gap_met = support.gap <= cfg.gap_tol
        elapsed = time.perf_counter() - start
        logger.info(
            "%s: %d iterations, bounds [%s, %s], %d swaps",
            self.name,
            iteration,
            fmt(support.lower),
            fmt(support.upper),
            trace.accepted,
        )
        return RefineOutcome(support.current, trace, support, elapsed)


__all__ = ["BaseRefiner", "RefineOutcome"]
