"""Bounds from a single EVV.

Both functions pair the EVV with the corner points ``e^i`` of the partition
range and cross-check their closed forms against :func:`supporting_bounds`.
"""
from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from ..errors import DegenerateEvvError, NotNormalizedError, NumericalInconsistencyError
from ..evv import EvvRecord, corner_evv
from ..measure import Instance
from .core import BoundsResult, supporting_bounds, upper_ratio

_CROSS_CHECK_TOL = 1e-9


def _leading_agent(u: np.ndarray, alpha: np.ndarray) -> int:
    return int(np.argmax(u / alpha))


def single_evv_bounds(inst: Instance, rec: EvvRecord, alpha: Sequence[float]) -> BoundsResult:
    """Bounds from one EVV of any weight vector on finite measures."""

    a = np.asarray(alpha, dtype=float)
    u = rec.u
    if not np.any(u > 0.0):
        raise DegenerateEvvError("the EVV is the zero vector")
    masses = inst.masses
    j = _leading_agent(u, a)
    others = np.arange(inst.n) != j
    denom = a[j] + float(np.sum((a[others] * u[j] - a[j] * u[others]) / masses[others]))
    lower = float(u[j] / denom)
    upper = upper_ratio(rec, a)

    evvs = [corner_evv(inst, i) for i in range(inst.n)]
    evvs[j] = rec
    generic = supporting_bounds(evvs, a, pool=[rec])
    if generic.lower is None or not math.isclose(generic.lower, lower, rel_tol=_CROSS_CHECK_TOL, abs_tol=1e-12):
        raise NumericalInconsistencyError(
            f"single-EVV lower bound {lower} disagrees with the corner basis value {generic.lower}"
        )
    return BoundsResult(upper, 0, generic.cone_status, lower, generic.basis, generic.solution)


def legut_bounds(inst: Instance, rec: EvvRecord, alpha: Sequence[float]) -> BoundsResult:
    """Legut's bounds ``u_j / (u_j - alpha_j (K - 1)) <= v <= K`` with ``K = sum(u)``.

    Needs probability measures and the uniform weight vector; use
    :func:`single_evv_bounds` otherwise.
    """

    if not inst.is_normalized():
        raise NotNormalizedError("Legut's bounds need probability measures; use single_evv_bounds")
    if not np.allclose(rec.beta, 1.0 / inst.n, atol=1e-12):
        raise NotNormalizedError("Legut's bounds need the uniform weight vector; use single_evv_bounds")
    a = np.asarray(alpha, dtype=float)
    u = rec.u
    if not np.any(u > 0.0):
        raise DegenerateEvvError("the EVV is the zero vector")
    j = _leading_agent(u, a)
    k = float(u.sum())
    lower = float(u[j] / (u[j] - a[j] * (k - 1.0)))
    reference = single_evv_bounds(inst, rec, a)
    return BoundsResult(k, 0, reference.cone_status, lower, reference.basis, reference.solution)


__all__ = ["legut_bounds", "single_evv_bounds"]
