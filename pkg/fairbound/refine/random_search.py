"""Random refinement: weight vectors drawn uniformly from the simplex."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence, Tuple

import numpy as np

from ..bounds import BoundsResult
from ..evv import EvvRecord
from ..measure import Instance
from .base import BaseRefiner
from .config import RefineConfig, RefineMode
from .trace import RefineTrace


@dataclass
class RandomRefiner(BaseRefiner):
    """Samples ``Dirichlet(1, ..., 1)`` weights from a seeded generator."""

    config: RefineConfig = field(default_factory=RefineConfig)
    name: str = "random"

    def propose(self, inst: Instance, alpha: np.ndarray, first: EvvRecord) -> Iterator[np.ndarray]:
        rng = np.random.default_rng(self.config.seed)
        ones = np.ones(inst.n)
        while True:
            yield rng.dirichlet(ones)


def refine_random(
    inst: Instance,
    alpha: Sequence[float],
    count: int,
    seed: Optional[int] = 0,
    config: Optional[RefineConfig] = None,
) -> Tuple[BoundsResult, RefineTrace]:
    """Draw ``count`` random weight vectors and keep the best bounds."""

    base = config or RefineConfig()
    cfg = RefineConfig(
        mode=RefineMode.RANDOM,
        max_iter=count,
        seed=seed,
        gap_tol=base.gap_tol,
        progress=base.progress,
        engine=base.engine,
    )
    outcome = RandomRefiner(cfg).run(inst, alpha)
    return outcome.result, outcome.trace


__all__ = ["RandomRefiner", "refine_random"]
