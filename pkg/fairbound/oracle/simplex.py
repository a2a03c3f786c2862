"""Dense tableau simplex for ``min c.x  s.t.  A x = b, x >= 0``.

Needs a feasible starting basis.  Pricing is Dantzig's most negative reduced
cost; a run of degenerate pivots switches to Bland's rule until the
objective moves again.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..errors import OracleError
from ..utils.logging import logger

PIVOT_TOL = 1e-9
CERT_TOL = 1e-9
DEGENERATE_STREAK = 50


@dataclass(frozen=True, eq=False)
class LPSolution:
    """Optimal basic solution with the data needed to certify it."""

    x: np.ndarray
    objective: float
    basis: Tuple[int, ...]
    duals: np.ndarray
    iterations: int
    c: np.ndarray
    A: np.ndarray
    b: np.ndarray

    def certificate(self, tol: float = CERT_TOL) -> Tuple[float, float]:
        """Return ``(primal_violation, dual_violation)``; both are ``<= tol`` at an optimum."""

        primal = max(
            float(np.abs(self.A @ self.x - self.b).max()),
            float(max(0.0, -self.x.min())),
        )
        reduced = self.c - self.A.T @ self.duals
        dual = float(max(0.0, -reduced.min()))
        return primal, dual

    def verify(self, tol: float = CERT_TOL) -> None:
        primal, dual = self.certificate(tol)
        if primal > tol or dual > tol:
            raise OracleError(f"LP certificate failed: primal violation {primal:.3g}, dual violation {dual:.3g}")


def _pivot_col(T: np.ndarray, bland: bool) -> Optional[int]:
    costs = T[-1, :-1]
    candidates = np.nonzero(costs < -PIVOT_TOL)[0]
    if candidates.size == 0:
        return None
    if bland:
        return int(candidates[0])
    return int(candidates[np.argmin(costs[candidates])])


def _pivot_row(T: np.ndarray, basis: List[int], col: int, bland: bool) -> Optional[int]:
    column = T[:-1, col]
    rows = np.nonzero(column > PIVOT_TOL)[0]
    if rows.size == 0:
        return None
    ratios = T[rows, -1] / column[rows]
    best = ratios.min()
    ties = rows[ratios <= best + PIVOT_TOL * max(1.0, abs(best))]
    if bland:
        return int(ties[np.argmin([basis[r] for r in ties])])
    return int(ties[0])


def _apply_pivot(T: np.ndarray, basis: List[int], row: int, col: int) -> None:
    basis[row] = col
    T[row] /= T[row, col]
    factors = T[:, col].copy()
    factors[row] = 0.0
    T -= np.outer(factors, T[row])


def solve_standard_form(
    c: np.ndarray,
    A: np.ndarray,
    b: np.ndarray,
    basis: Sequence[int],
    max_iter: int = 20000,
) -> LPSolution:
    """Minimize ``c.x`` from the feasible basis ``basis`` (one column per row)."""

    rows = A.shape[0]
    basis = list(basis)
    if len(basis) != rows:
        raise OracleError(f"basis has {len(basis)} columns for {rows} rows")
    T = _tableau(c, A, b, basis)
    if T[:-1, -1].min() < -CERT_TOL:
        raise OracleError("starting basis is infeasible")

    bland = False
    streak = 0
    reinverted = False
    for it in range(1, max_iter + 1):
        col = _pivot_col(T, bland)
        if col is None:
            solution = _finish(c, A, b, basis, it - 1)
            if reinverted or max(solution.certificate()) <= CERT_TOL:
                return solution
            # Rounding drift: rebuild the tableau from the basis and keep pivoting.
            logger.debug("reinverting basis after %d pivots", it - 1)
            T = _tableau(c, A, b, basis)
            reinverted = True
            col = _pivot_col(T, bland)
            if col is None:
                return solution
        row = _pivot_row(T, basis, col, bland)
        if row is None:
            raise OracleError("LP is unbounded")
        degenerate = T[row, -1] <= PIVOT_TOL
        _apply_pivot(T, basis, row, col)
        streak = streak + 1 if degenerate else 0
        if streak >= DEGENERATE_STREAK and not bland:
            logger.debug("switching to Bland's rule after %d degenerate pivots", streak)
        bland = streak >= DEGENERATE_STREAK
    raise OracleError(f"simplex did not converge within {max_iter} pivots")


def _tableau(c: np.ndarray, A: np.ndarray, b: np.ndarray, basis: List[int]) -> np.ndarray:
    rows, cols = A.shape
    B = A[:, basis]
    T = np.empty((rows + 1, cols + 1))
    try:
        T[:-1, :-1] = np.linalg.solve(B, A)
        T[:-1, -1] = np.linalg.solve(B, b)
    except np.linalg.LinAlgError as exc:
        raise OracleError("basis is singular") from exc
    T[-1, :-1] = c - c[basis] @ T[:-1, :-1]
    T[-1, -1] = -float(c[basis] @ T[:-1, -1])
    return T


def _finish(c: np.ndarray, A: np.ndarray, b: np.ndarray, basis: List[int], iterations: int) -> LPSolution:
    # Values and duals come from the original data, not the updated tableau.
    B = A[:, basis]
    x = np.zeros(A.shape[1])
    x[basis] = np.linalg.solve(B, b)
    duals = np.linalg.solve(B.T, c[basis])
    return LPSolution(x, float(c @ x), tuple(basis), duals, iterations, c, A, b)


__all__ = ["LPSolution", "solve_standard_form"]
