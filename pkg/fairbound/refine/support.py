"""Supporting EVV sets and the determinant swap test."""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from ..bounds import (
    EPS_DET,
    BoundsResult,
    ConeStatus,
    EvvBasis,
    bounds_from_basis,
    cone_membership,
    lower_bound,
    scaled_det,
    upper_ratio,
)
from ..errors import ConeTestFailed, NumericalInconsistencyError, RankDeficientError, SwapRollback
from ..evv import DEFAULT_ENGINE, EngineConfig, EvvRecord, compute_evv, corner_evv
from ..measure import Instance
from ..utils.logging import fmt, logger

MONOTONE_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class SupportSet:
    """Supporting EVVs for the lower bound plus the pool feeding the upper bound."""

    basis: EvvBasis
    pool: Tuple[EvvRecord, ...]
    current: BoundsResult

    @classmethod
    def from_basis(
        cls, basis: EvvBasis, alpha: Sequence[float], pool: Optional[Sequence[EvvRecord]] = None
    ) -> "SupportSet":
        records = tuple(pool) if pool is not None else basis.evvs
        return cls(basis, records, bounds_from_basis(basis, alpha, records))

    @property
    def lower(self) -> float:
        return float(self.current.lower) if self.current.lower is not None else 0.0

    @property
    def upper(self) -> float:
        return self.current.upper

    @property
    def gap(self) -> float:
        return self.current.gap

    def with_candidate(self, rec: EvvRecord, alpha: Sequence[float]) -> "SupportSet":
        """Append ``rec`` to the pool; the upper bound can only go down."""

        ratio = upper_ratio(rec, alpha)
        current = self.current
        if ratio < current.upper:
            current = replace(current, upper=ratio, argmin_upper=len(self.pool))
        return SupportSet(self.basis, self.pool + (rec,), current)


@dataclass(frozen=True)
class SwapDecision:
    """Result of the swap test.

    ``index`` is the supporting EVV to replace, or ``None``.  ``coplanar``
    lists the ``k`` whose inequality held with equality because the claim
    vector is coplanar; those EVVs can be discarded after the swap.
    """

    index: Optional[int]
    strict: bool = False
    coplanar: Tuple[int, ...] = ()
    signs: Dict[Tuple[int, int], float] = field(default_factory=dict)
    reason: str = ""

    @property
    def accepted(self) -> bool:
        return self.index is not None


def basis_swap_test(basis: EvvBasis, u_star: Sequence[float], alpha: Sequence[float]) -> SwapDecision:
    """Scan ``j = 1..m`` for the first column ``u^j`` that ``u_star`` may replace.

    Column ``j`` qualifies when for every ``k != j``
    ``det(alpha_bar, U_*j-k) * det(u_bar^j, U_*j-k) <= 0``, where ``U_*j-k`` is
    ``U_bar`` with column ``j`` replaced by ``u_bar*`` and column ``k`` deleted.
    """

    star = np.asarray(u_star, dtype=float)
    if basis.m < basis.n and not basis.in_span(star):
        return SwapDecision(None, reason="candidate outside the span of the supporting EVVs")
    ubar = basis.ubar
    abar = basis.restrict(alpha)
    sbar = basis.restrict(star)
    signs: Dict[Tuple[int, int], float] = {}
    for j in range(basis.m):
        with_star = ubar.copy()
        with_star[:, j] = sbar
        if abs(scaled_det(with_star)) <= EPS_DET:
            continue
        qualifies, strict, coplanar = True, True, []
        for k in range(basis.m):
            if k == j:
                continue
            reduced = np.delete(with_star, k, axis=1)
            d_alpha = scaled_det(np.column_stack([abar, reduced]))
            d_j = scaled_det(np.column_stack([ubar[:, j], reduced]))
            signs[(j, k)] = d_alpha * d_j
            alpha_zero = abs(d_alpha) <= EPS_DET
            if alpha_zero or abs(d_j) <= EPS_DET:
                strict = False
                if alpha_zero:
                    coplanar.append(k)
            elif d_alpha * d_j > 0.0:
                qualifies = False
                break
        if qualifies:
            return SwapDecision(j, strict, tuple(coplanar), signs)
    return SwapDecision(None, signs=signs, reason="no supporting EVV can be replaced")


def swap_test(support: SupportSet, candidate: EvvRecord, alpha: Sequence[float]) -> SwapDecision:
    """Decide whether ``candidate`` replaces one of the supporting EVVs."""

    return basis_swap_test(support.basis, candidate.u, alpha)


def brute_force_swap(basis: EvvBasis, u_star: Sequence[float], alpha: Sequence[float]) -> Optional[int]:
    """Reference decision from repeated cone tests.

    ``u_star`` must lie in ``cone(U)``; then the first ``j`` whose post-swap
    matrix still contains ``alpha`` in its cone is returned.
    """

    star = np.asarray(u_star, dtype=float)
    if basis.m < basis.n and not basis.in_span(star):
        return None
    if cone_membership(basis, star).status is ConeStatus.OUTSIDE:
        return None
    for j in range(basis.m):
        try:
            swapped = basis.replaced(j, EvvRecord.from_values(np.full(basis.n, 1.0 / basis.n), star))
        except RankDeficientError:
            continue
        if cone_membership(swapped, alpha).status is not ConeStatus.OUTSIDE:
            return j
    return None


def apply_swap(
    support: SupportSet,
    j: int,
    candidate: EvvRecord,
    alpha: Sequence[float],
    discard: Sequence[int] = (),
) -> SupportSet:
    """Put ``candidate`` at position ``j`` and re-verify the cone.

    EVVs listed in ``discard`` (coplanar with the claim vector after the swap)
    are dropped when that leaves the lower bound unchanged.  Raises
    :class:`~fairbound.errors.SwapRollback` when verification fails; the
    original ``support`` is untouched.
    """

    try:
        basis = support.basis.replaced(j, candidate)
    except RankDeficientError as exc:
        raise SwapRollback(f"post-swap columns dependent: {exc}") from exc
    report = cone_membership(basis, alpha)
    if report.status is ConeStatus.OUTSIDE:
        raise SwapRollback("post-swap basis no longer contains the claim vector")
    try:
        solution = lower_bound(basis, alpha, report)
    except NumericalInconsistencyError as exc:
        raise SwapRollback(str(exc)) from exc
    if solution.r_star < support.lower - MONOTONE_TOL:
        raise SwapRollback(f"lower bound would drop from {support.lower} to {solution.r_star}")

    drop = [k for k in discard if k != j]
    if drop:
        try:
            shrunk = basis.without(drop)
            shrunk_report = cone_membership(shrunk, alpha)
            shrunk_solution = lower_bound(shrunk, alpha, shrunk_report)
        except (RankDeficientError, ConeTestFailed, NumericalInconsistencyError) as exc:
            logger.debug("keeping coplanar EVVs %s: %s", drop, exc)
        else:
            if abs(shrunk_solution.r_star - solution.r_star) <= MONOTONE_TOL * max(1.0, solution.r_star):
                basis, report, solution = shrunk, shrunk_report, shrunk_solution

    current = replace(
        support.current,
        lower=solution.r_star,
        cone_status=report.status,
        basis=basis,
        solution=solution,
        uncertified_r=None,
    )
    return SupportSet(basis, support.pool, current)


def consider_candidate(
    support: SupportSet, candidate: EvvRecord, alpha: Sequence[float]
) -> Tuple[SupportSet, SwapDecision, str]:
    """Feed one candidate EVV to the upper-bound pool and to the swap test."""

    support = support.with_candidate(candidate, alpha)
    decision = swap_test(support, candidate, alpha)
    if not decision.accepted:
        return support, decision, ""
    try:
        updated = apply_swap(support, decision.index, candidate, alpha, decision.coplanar)
    except SwapRollback as exc:
        logger.warning("swap at %d rolled back: %s", decision.index, exc)
        return support, SwapDecision(None, reason=str(exc)), f"rollback: {exc}"
    logger.debug("swap at %d: lower %s -> %s", decision.index, fmt(support.lower), fmt(updated.lower))
    return updated, decision, ""


def initial_support(
    inst: Instance, alpha: Sequence[float], engine: EngineConfig = DEFAULT_ENGINE
) -> Tuple[SupportSet, EvvRecord, SwapDecision]:
    """Corner basis, then the uniform-weight EVV is offered to the swap test.

    The result carries the single-EVV bounds of the uniform weight vector.
    """

    corners = [corner_evv(inst, i) for i in range(inst.n)]
    support = SupportSet.from_basis(EvvBasis.from_evvs(corners), alpha, corners)
    uniform = compute_evv(inst, np.full(inst.n, 1.0 / inst.n), engine)
    support, decision, _note = consider_candidate(support, uniform, alpha)
    return support, uniform, decision


__all__ = [
    "SupportSet",
    "SwapDecision",
    "apply_swap",
    "basis_swap_test",
    "brute_force_swap",
    "consider_candidate",
    "initial_support",
    "swap_test",
]
