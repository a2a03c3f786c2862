"""Small dense linear algebra used by the bound computations.

Determinants and inverses go through LAPACK's LU factorization with partial
pivoting (``numpy.linalg``); row selection uses ``scipy.linalg.lu``.
"""
from __future__ import annotations

from typing import Tuple

import numpy as np
from scipy.linalg import lu

from ..errors import RankDeficientError

EPS_DET = 1e-9
EPS_RANK = 1e-10


def select_basis_rows(U: np.ndarray) -> Tuple[int, ...]:
    """Pick ``m`` rows of the ``n x m`` matrix ``U`` giving a nonsingular block.

    Rows are the pivots of Gaussian elimination with partial pivoting, which
    greedily keeps ``|det(U_bar)|`` large.  Raises
    :class:`~fairbound.errors.RankDeficientError` when the numerical rank is
    below ``m``.
    """

    mat = np.atleast_2d(np.asarray(U, dtype=float))
    n, m = mat.shape
    if m == 0 or m > n:
        raise RankDeficientError(f"need 1 <= m <= n columns, got m={m}, n={n}")
    scale = float(np.abs(mat).max())
    if scale == 0.0:
        raise RankDeficientError("columns not linearly independent (zero matrix)")
    p, _l, upper = lu(mat)
    pivots = np.abs(np.diag(upper))
    if np.any(pivots <= EPS_RANK * scale):
        raise RankDeficientError("columns not linearly independent")
    order = np.argmax(p, axis=0)
    return tuple(sorted(int(r) for r in order[:m]))


def scaled_det(M: np.ndarray) -> float:
    """``det(M)`` divided by the product of its column norms (Hadamard ratio)."""

    mat = np.atleast_2d(np.asarray(M, dtype=float))
    norms = np.linalg.norm(mat, axis=0)
    if np.any(norms == 0.0):
        return 0.0
    return float(np.linalg.det(mat) / np.prod(norms))


def replace_column(M: np.ndarray, i: int, column: np.ndarray) -> np.ndarray:
    out = np.array(M, dtype=float, copy=True)
    out[:, i] = column
    return out


__all__ = ["EPS_DET", "EPS_RANK", "replace_column", "scaled_det", "select_basis_rows"]
