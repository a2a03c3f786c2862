"""Cone membership, lower and upper bounds from a set of EVVs.

``U`` holds the EVVs as columns (``n x m``); ``U_bar`` is the ``m x m`` block
on the selected rows and ``alpha_bar`` the matching entries of the claims.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..errors import ConeTestFailed, NumericalInconsistencyError, RankDeficientError
from ..evv import EvvRecord
from .linalg import EPS_DET, replace_column, scaled_det, select_basis_rows

SANDWICH_TOL = 1e-9
SPAN_TOL = 1e-8
CRAMER_TOL = 1e-9


class ConeStatus(str, Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


@dataclass(frozen=True, eq=False)
class EvvBasis:
    """``m <= n`` linearly independent EVVs and the rows defining ``U_bar``."""

    evvs: Tuple[EvvRecord, ...]
    U: np.ndarray
    rows: Tuple[int, ...]
    det_ubar: float

    @classmethod
    def from_evvs(cls, evvs: Sequence[EvvRecord]) -> "EvvBasis":
        if not evvs:
            raise RankDeficientError("empty basis")
        U = np.column_stack([rec.u for rec in evvs])
        rows = select_basis_rows(U)
        det = float(np.linalg.det(U[list(rows), :]))
        return cls(tuple(evvs), U, rows, det)

    @property
    def m(self) -> int:
        return self.U.shape[1]

    @property
    def n(self) -> int:
        return self.U.shape[0]

    @property
    def ubar(self) -> np.ndarray:
        return self.U[list(self.rows), :]

    def restrict(self, v: Sequence[float]) -> np.ndarray:
        return np.asarray(v, dtype=float)[list(self.rows)]

    def replaced(self, j: int, rec: EvvRecord) -> "EvvBasis":
        evvs = list(self.evvs)
        evvs[j] = rec
        return EvvBasis.from_evvs(evvs)

    def without(self, drop: Iterable[int]) -> "EvvBasis":
        dropped = set(drop)
        return EvvBasis.from_evvs([rec for k, rec in enumerate(self.evvs) if k not in dropped])

    def in_span(self, v: Sequence[float], tol: float = SPAN_TOL) -> bool:
        """Whether ``v`` lies in the column span of ``U`` (checked on all rows)."""

        vec = np.asarray(v, dtype=float)
        coef = np.linalg.solve(self.ubar, self.restrict(vec))
        residual = np.abs(self.U @ coef - vec).max()
        return bool(residual <= tol * max(1.0, float(np.abs(vec).max())))


@dataclass(frozen=True)
class ConeReport:
    """Outcome of the determinant test for ``alpha in cone(U)``.

    ``dets[i]`` is ``det(U_bar_alpha_i)``; ``signs[i]`` is the same determinant
    normalized by its column norms and multiplied by ``sign(det(U_bar))``.
    """

    status: ConeStatus
    det_ubar: float
    dets: Tuple[float, ...]
    signs: Tuple[float, ...]
    span_residual: float = 0.0


@dataclass(frozen=True, eq=False)
class ConeSolution:
    """``r*`` and the convex weights ``t`` of ``U t = r* alpha``."""

    r_star: float
    t: np.ndarray
    dets: Tuple[float, ...]
    residual: float


@dataclass(frozen=True, eq=False)
class BoundsResult:
    """Enclosure ``lower <= v^alpha <= upper`` with its certifying data.

    ``uncertified_r`` is set only when the basis fails the cone test: it is
    the ``r`` solving ``U_bar t = r alpha_bar, sum(t) = 1`` with some ``t_i < 0``
    and is not a bound on ``v^alpha``.
    """

    upper: float
    argmin_upper: int
    cone_status: ConeStatus
    lower: Optional[float] = None
    basis: Optional[EvvBasis] = None
    solution: Optional[ConeSolution] = None
    uncertified_r: Optional[float] = None

    def __post_init__(self) -> None:
        if self.lower is not None and self.lower > self.upper + SANDWICH_TOL:
            raise NumericalInconsistencyError(f"lower bound {self.lower} exceeds upper bound {self.upper}")

    @property
    def gap(self) -> float:
        return math.inf if self.lower is None else self.upper - self.lower


def cone_membership(basis: EvvBasis, alpha: Sequence[float]) -> ConeReport:
    """Decide ``alpha in cone(u^1, ..., u^m)`` from determinant signs."""

    a = np.asarray(alpha, dtype=float)
    ubar = basis.ubar
    abar = basis.restrict(a)
    det_sign = math.copysign(1.0, basis.det_ubar)
    dets = []
    signs = []
    for i in range(basis.m):
        replaced = replace_column(ubar, i, abar)
        dets.append(float(np.linalg.det(replaced)))
        signs.append(det_sign * scaled_det(replaced))

    if any(s < -EPS_DET for s in signs):
        status = ConeStatus.OUTSIDE
    elif all(s > EPS_DET for s in signs):
        status = ConeStatus.INTERIOR
    else:
        status = ConeStatus.BOUNDARY

    residual = 0.0
    if basis.m < basis.n:
        coef = np.linalg.solve(ubar, abar)
        residual = float(np.abs(basis.U @ coef - a).max() / np.abs(a).max())
        if residual > SPAN_TOL:
            status = ConeStatus.OUTSIDE
    return ConeReport(status, basis.det_ubar, tuple(dets), tuple(signs), residual)


def solve_cone_system(basis: EvvBasis, alpha: Sequence[float]) -> Tuple[float, np.ndarray]:
    """Solve ``U_bar t = r alpha_bar, sum(t) = 1`` directly by elimination."""

    m = basis.m
    abar = basis.restrict(alpha)
    system = np.zeros((m + 1, m + 1))
    system[:m, :m] = basis.ubar
    system[:m, m] = -abar
    system[m, :m] = 1.0
    rhs = np.zeros(m + 1)
    rhs[m] = 1.0
    sol = np.linalg.solve(system, rhs)
    return float(sol[m]), sol[:m]


def uncertified_value(basis: EvvBasis, alpha: Sequence[float]) -> Optional[float]:
    """``r`` of the cone system regardless of the sign of ``t``; ``None`` when singular."""

    try:
        r, _t = solve_cone_system(basis, alpha)
    except np.linalg.LinAlgError:
        return None
    return r if math.isfinite(r) else None


def lower_bound(basis: EvvBasis, alpha: Sequence[float], report: Optional[ConeReport] = None) -> ConeSolution:
    """``r* = 1 / sum_ij alpha_bar_j [U_bar^-1]_ij``, a guaranteed lower bound."""

    a = np.asarray(alpha, dtype=float)
    report = report or cone_membership(basis, a)
    if report.status is ConeStatus.OUTSIDE:
        raise ConeTestFailed("no lower bound from this basis")

    weights = np.linalg.inv(basis.ubar) @ basis.restrict(a)
    r_star = 1.0 / float(weights.sum())
    t_inverse = r_star * weights
    dets = np.asarray(report.dets)
    t_cramer = dets / dets.sum()
    if not np.allclose(t_cramer, t_inverse, rtol=CRAMER_TOL, atol=CRAMER_TOL):
        raise NumericalInconsistencyError(f"Cramer weights {t_cramer} disagree with inverse weights {t_inverse}")

    t = np.clip(t_cramer, 0.0, None)
    t = t / t.sum()
    residual = float(np.abs(basis.U @ t - r_star * a).max())
    return ConeSolution(r_star, t, report.dets, residual)


def upper_ratio(rec: EvvRecord, alpha: Sequence[float]) -> float:
    """``(beta . u) / (beta . alpha)``: where the supporting hyperplane meets the claim ray."""

    return float(np.dot(rec.beta, rec.u) / np.dot(rec.beta, np.asarray(alpha, dtype=float)))


def upper_bound(evvs: Sequence[EvvRecord], alpha: Sequence[float]) -> Tuple[float, int]:
    """Minimum supporting-hyperplane ratio over every EVV and its index."""

    if not evvs:
        raise ValueError("upper_bound needs at least one EVV")
    ratios = [upper_ratio(rec, alpha) for rec in evvs]
    idx = int(np.argmin(ratios))
    return ratios[idx], idx


def assemble_basis(evvs: Sequence[EvvRecord]) -> EvvBasis:
    """Keep EVVs in input order while they stay linearly independent, at most ``n``."""

    chosen: List[EvvRecord] = []
    basis: Optional[EvvBasis] = None
    for rec in evvs:
        if basis is not None and basis.m == basis.n:
            break
        try:
            basis = EvvBasis.from_evvs(chosen + [rec])
        except RankDeficientError:
            continue
        chosen.append(rec)
    if basis is None:
        raise RankDeficientError("no linearly independent EVV among the inputs")
    return basis


def bounds_from_basis(
    basis: EvvBasis, alpha: Sequence[float], pool: Sequence[EvvRecord]
) -> BoundsResult:
    upper, idx = upper_bound(pool, alpha)
    report = cone_membership(basis, alpha)
    if report.status is ConeStatus.OUTSIDE:
        return BoundsResult(upper, idx, report.status, basis=basis, uncertified_r=uncertified_value(basis, alpha))
    solution = lower_bound(basis, alpha, report)
    return BoundsResult(upper, idx, report.status, solution.r_star, basis, solution)


def supporting_bounds(
    evvs: Sequence[EvvRecord], alpha: Sequence[float], pool: Optional[Sequence[EvvRecord]] = None
) -> BoundsResult:
    """Two-sided bounds from several EVVs.

    The lower bound uses a basis assembled from ``evvs``; the upper bound is
    the minimum over ``pool`` (default: ``evvs``), which needs no independence.
    """

    basis = assemble_basis(evvs)
    return bounds_from_basis(basis, alpha, list(pool) if pool is not None else list(evvs))


__all__ = [
    "BoundsResult",
    "ConeReport",
    "ConeSolution",
    "ConeStatus",
    "EvvBasis",
    "SANDWICH_TOL",
    "assemble_basis",
    "bounds_from_basis",
    "cone_membership",
    "lower_bound",
    "solve_cone_system",
    "supporting_bounds",
    "uncertified_value",
    "upper_bound",
    "upper_ratio",
]
