"""Discretized alpha-optimal value and weighted maxsum."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from ..errors import OracleError
from ..evv import as_weights
from ..utils.logging import fmt, logger
from .discretize import DiscretizedInstance
from .simplex import LPSolution, solve_standard_form


@dataclass(frozen=True, eq=False)
class OracleResult:
    """``value`` is the optimum ``r``; ``x[i, c]`` the share of cell ``c`` given to agent ``i``."""

    value: float
    x: np.ndarray
    lp: LPSolution

    @property
    def shares(self) -> np.ndarray:
        return self.x.sum(axis=1)


def _standard_form(d: DiscretizedInstance, alpha: np.ndarray):
    # Columns: x[i, c] row-major, then r, then one slack per agent.
    n, cells = d.n, d.cells
    nx = n * cells
    A = np.zeros((n + cells, nx + 1 + n))
    for i in range(n):
        A[i, i * cells : (i + 1) * cells] = -d.masses[i]
        A[n:, i * cells : (i + 1) * cells] = np.eye(cells)
    A[:n, nx] = alpha
    A[:n, nx + 1 :] = np.eye(n)
    b = np.concatenate([np.zeros(n), np.ones(cells)])
    c = np.zeros(A.shape[1])
    c[nx] = -1.0
    # Each cell starts with the agent valuing it most relative to its claim.
    owner = np.argmax(d.masses / alpha[:, None], axis=0)
    basis = [nx + 1 + i for i in range(n)] + [int(owner[k]) * cells + k for k in range(cells)]
    return c, A, b, basis


def oracle_value(
    d: DiscretizedInstance, alpha: Optional[Sequence[float]] = None, max_iter: int = 20000
) -> OracleResult:
    """Solve ``max r  s.t.  sum_c x_ic m_ic >= alpha_i r,  sum_i x_ic = 1,  x >= 0``."""

    a = d.alpha if alpha is None else np.asarray(alpha, dtype=float)
    c, A, b, basis = _standard_form(d, a)
    lp = solve_standard_form(c, A, b, basis, max_iter=max_iter)
    lp.verify()
    n, cells = d.n, d.cells
    value = float(lp.x[n * cells])
    x = lp.x[: n * cells].reshape(n, cells)
    achieved = float(np.min((x * d.masses).sum(axis=1) / a))
    if achieved < value - 1e-9 * max(1.0, value):
        raise OracleError(f"assignment reaches {achieved}, LP reports {value}")
    logger.debug("oracle value %s after %d pivots on %d cells", fmt(value), lp.iterations, cells)
    return OracleResult(value, x, lp)


def oracle_maxsum(d: DiscretizedInstance, beta: Sequence[float]) -> Tuple[float, np.ndarray]:
    """Greedy per-cell argmax of ``beta_i m_ic`` (lowest index on ties)."""

    b = as_weights(beta, d.n)
    weighted = b[:, None] * d.masses
    owner = np.argmax(weighted, axis=0)
    return float(weighted[owner, np.arange(d.cells)].sum()), owner


def sandwich_slack(d: DiscretizedInstance, alpha: Optional[Sequence[float]] = None) -> float:
    """One-cell resolution slack ``2 max_ic m_ic / alpha_i``."""

    a = d.alpha if alpha is None else np.asarray(alpha, dtype=float)
    return float(2.0 * (d.masses / a[:, None]).max())


__all__ = ["OracleResult", "oracle_maxsum", "oracle_value", "sandwich_slack"]
