"""Efficient value vectors of weighted maxsum partitions."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np
from tqdm import tqdm

from ..measure import Instance, measure_of
from ..utils.threads import worker_count
from .partition import DEFAULT_ENGINE, Cell, EngineConfig, LabeledPartition, as_weights, weighted_argmax_partition


@dataclass(frozen=True, eq=False)
class EvvRecord:
    """A weight vector, its optimal partition and the value vector ``u``.

    Attributes
    ----------
    beta:
        Weights in the simplex.
    u:
        ``u_i = mu_i(A_i)`` for the optimal partition.
    partition:
        The labeled partition, or ``None`` for records built from raw values.
    """

    beta: np.ndarray
    u: np.ndarray
    partition: Optional[LabeledPartition] = None

    @classmethod
    def from_values(cls, beta: Sequence[float], u: Sequence[float]) -> "EvvRecord":
        b = np.asarray(beta, dtype=float)
        return cls(b / b.sum(), np.asarray(u, dtype=float))

    @property
    def n(self) -> int:
        return int(self.u.size)

    @property
    def value(self) -> float:
        return maxsum_value(self)


def maxsum_value(rec: EvvRecord) -> float:
    """``sum_i beta_i u_i``."""

    return float(np.dot(rec.beta, rec.u))


def compute_evv(inst: Instance, beta: Sequence[float], config: EngineConfig = DEFAULT_ENGINE) -> EvvRecord:
    """Solve the weighted maxsum problem for ``beta`` and return its EVV."""

    b = as_weights(beta, inst.n)
    partition = weighted_argmax_partition(inst, b, config)
    u = np.array([measure_of(f, part) for f, part in zip(inst.densities, partition.parts)])
    return EvvRecord(b, np.clip(u, 0.0, None), partition)


def corner_evv(inst: Instance, i: int) -> EvvRecord:
    """The corner point ``e^i``: the whole cake goes to agent ``i``."""

    beta = np.zeros(inst.n)
    beta[i] = 1.0
    u = np.zeros(inst.n)
    u[i] = inst.masses[i]
    partition = LabeledPartition(inst.n, (Cell(0.0, 1.0, i),))
    return EvvRecord(beta, u, partition)


def compute_evvs(
    inst: Instance,
    betas: Sequence[Sequence[float]],
    config: EngineConfig = DEFAULT_ENGINE,
    *,
    workers: Optional[int] = None,
    progress: bool = False,
) -> List[EvvRecord]:
    """Compute EVVs for several weight vectors on a thread pool, preserving order."""

    workers = workers or worker_count()
    with ThreadPoolExecutor(max_workers=workers) as ex:
        results = ex.map(lambda b: compute_evv(inst, b, config), betas)
        return list(tqdm(results, total=len(betas), desc="evv", disable=not progress))


def parts_cover(partition: LabeledPartition) -> float:
    """Total Lebesgue length of the agents' parts."""

    return float(sum(part.length for part in partition.parts))


__all__ = [
    "EvvRecord",
    "compute_evv",
    "compute_evvs",
    "corner_evv",
    "maxsum_value",
    "parts_cover",
]
