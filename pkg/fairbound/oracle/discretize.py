"""Finite surrogate of the cake: cells of ``[0, 1]`` and their masses."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ..errors import DomainError
from ..measure import Instance


@dataclass(frozen=True, eq=False)
class DiscretizedInstance:
    """Cell edges ``grid`` and masses ``masses[i, c] = mu_i(cell c)``."""

    grid: np.ndarray
    masses: np.ndarray
    alpha: np.ndarray

    @property
    def n(self) -> int:
        return self.masses.shape[0]

    @property
    def cells(self) -> int:
        return self.masses.shape[1]

    @property
    def totals(self) -> np.ndarray:
        return self.masses.sum(axis=1)


def discretize(inst: Instance, cells: int, alpha: Optional[Sequence[float]] = None) -> DiscretizedInstance:
    """Uniform grid of ``cells`` cells refined by every density breakpoint.

    The result may hold a few more cells than requested; each one lies inside
    a single polynomial piece of every density.
    """

    if cells < inst.n:
        raise DomainError(f"cell count must be at least the number of agents {inst.n}, got {cells}")
    grid = np.union1d(np.linspace(0.0, 1.0, cells + 1), inst.breakpoints)
    masses = np.vstack([np.diff(f.cdf(grid)) for f in inst.densities])
    a = inst.alpha if alpha is None else np.asarray(alpha, dtype=float)
    return DiscretizedInstance(grid, np.clip(masses, 0.0, None), a)


__all__ = ["DiscretizedInstance", "discretize"]
