"""Optimal partitions of the weighted maxsum problem.

A point ``x`` goes to the agent maximizing ``beta_k f_k(x)``, ties to the lowest
index.  Cell boundaries are crossings of weighted densities, located by a
uniform scan refined with bisection on the pairwise difference polynomial.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from ..errors import DomainError
from ..measure import Instance, IntervalSet
from ..measure.models import Piece

N_SCAN = 4096
TOL_X = 1e-12
_WEIGHT_TOL = 1e-9
_MAX_SPLIT_DEPTH = 32


@dataclass(frozen=True)
class EngineConfig:
    """Scan resolution and crossing tolerance of the partition engine."""

    n_scan: int = N_SCAN
    tol_x: float = TOL_X

    def __post_init__(self) -> None:
        if self.n_scan < 2:
            raise ValueError("n_scan must be at least 2")
        if not self.tol_x > 0:
            raise ValueError("tol_x must be positive")


DEFAULT_ENGINE = EngineConfig()


def as_weights(beta: Sequence[float], n: int) -> np.ndarray:
    """Return ``beta`` as a point of the simplex ``Delta_{n-1}``.

    Zero components are allowed (corner weights); tiny negative rounding is
    clipped and the vector is renormalized.
    """

    b = np.asarray(beta, dtype=float).reshape(-1)
    if b.shape != (n,):
        raise DomainError(f"weight vector must have {n} components, got {b.size}")
    if not np.all(np.isfinite(b)):
        raise DomainError("weight vector has non-finite components")
    if np.any(b < -_WEIGHT_TOL):
        raise DomainError(f"weight vector has negative components: {b}")
    if abs(b.sum() - 1.0) > _WEIGHT_TOL:
        raise DomainError(f"weight vector sums to {b.sum()}, expected 1")
    b = np.clip(b, 0.0, None)
    return b / b.sum()


@dataclass(frozen=True)
class Cell:
    start: float
    end: float
    owner: int


@dataclass(frozen=True)
class LabeledPartition:
    """Cells of ``[0, 1]`` labeled with their owning agent."""

    n: int
    cells: Tuple[Cell, ...]

    @property
    def breakpoints(self) -> List[float]:
        return [c.end for c in self.cells[:-1]]

    @property
    def parts(self) -> Tuple[IntervalSet, ...]:
        """Per-agent interval sets ``A_1, ..., A_n``."""

        grouped: List[List[Tuple[float, float]]] = [[] for _ in range(self.n)]
        for cell in self.cells:
            grouped[cell.owner].append((cell.start, cell.end))
        return tuple(IntervalSet.merged(pairs) for pairs in grouped)

    def owner_at(self, x: float) -> int:
        for cell in self.cells:
            if cell.start <= x <= cell.end:
                return cell.owner
        raise DomainError(f"x={x} lies outside [0, 1]")

    def violations(self, inst: Instance, beta: Sequence[float], tol: float = 1e-9) -> List[Tuple[int, float]]:
        """Sample each cell at its midpoint and two interior points.

        Returns ``(cell index, x)`` for every sample point where the owner's weighted
        density falls below another agent's by more than ``tol``.
        """

        b = np.asarray(beta, dtype=float)
        bad: List[Tuple[int, float]] = []
        for idx, cell in enumerate(self.cells):
            width = cell.end - cell.start
            if width <= 0:
                continue
            for frac in (0.25, 0.5, 0.75):
                x = cell.start + frac * width
                weighted = b * np.array([f(x) for f in inst.densities])
                if weighted.max() - weighted[cell.owner] > tol:
                    bad.append((idx, x))
        return bad


def _bisect(g, a: float, b: float, tol: float) -> float:
    # g(a) >= 0 >= g(b)
    while b - a > tol:
        mid = 0.5 * (a + b)
        if g(mid) > 0.0:
            a = mid
        else:
            b = mid
    return 0.5 * (a + b)


def _split_segment(
    a: float,
    b: float,
    la: int,
    lb: int,
    polys: Sequence[Piece],
    beta: np.ndarray,
    tol: float,
    depth: int = 0,
) -> List[Tuple[float, float, int]]:
    if la == lb:
        return [(a, b, la)]
    pa, pb, wa, wb = polys[la], polys[lb], beta[la], beta[lb]
    c = _bisect(lambda x: wa * float(pa(x)) - wb * float(pb(x)), a, b, tol)
    weighted = beta * np.array([float(p(c)) for p in polys])
    lc = int(np.argmax(weighted))
    if lc in (la, lb) or depth >= _MAX_SPLIT_DEPTH or weighted[lc] <= max(weighted[la], weighted[lb]):
        return [(a, c, la), (c, b, lb)]
    return _split_segment(a, c, la, lc, polys, beta, tol, depth + 1) + _split_segment(
        c, b, lc, lb, polys, beta, tol, depth + 1
    )


def weighted_argmax_partition(
    inst: Instance, beta: Sequence[float], config: EngineConfig = DEFAULT_ENGINE
) -> LabeledPartition:
    """Assign each point to ``argmax_k beta_k f_k(x)``, ties to the lowest index."""

    b = as_weights(beta, inst.n)
    grid = np.union1d(np.linspace(0.0, 1.0, config.n_scan), inst.breakpoints)
    left, right = grid[:-1], grid[1:]
    mids = 0.5 * (left + right)

    # every segment lies inside one piece per agent
    piece_idx = np.empty((inst.n, mids.size), dtype=int)
    at_left = np.empty((inst.n, mids.size))
    at_right = np.empty((inst.n, mids.size))
    for i, f in enumerate(inst.densities):
        idx = f.piece_index(mids)
        piece_idx[i] = idx
        for k, piece in enumerate(f.pieces):
            mask = idx == k
            if np.any(mask):
                at_left[i, mask] = piece(left[mask])
                at_right[i, mask] = piece(right[mask])

    label_left = np.argmax(b[:, None] * at_left, axis=0)
    label_right = np.argmax(b[:, None] * at_right, axis=0)

    raw: List[Tuple[float, float, int]] = []
    for s in range(mids.size):
        la, lb = int(label_left[s]), int(label_right[s])
        if la == lb:
            raw.append((left[s], right[s], la))
            continue
        polys = [f.pieces[piece_idx[i, s]] for i, f in enumerate(inst.densities)]
        raw.extend(_split_segment(float(left[s]), float(right[s]), la, lb, polys, b, config.tol_x))

    cells: List[Cell] = []
    for start, end, owner in raw:
        if end <= start:
            continue
        if cells and cells[-1].owner == owner:
            cells[-1] = Cell(cells[-1].start, float(end), owner)
        else:
            start = cells[-1].end if cells else 0.0
            cells.append(Cell(float(start), float(end), owner))
    return LabeledPartition(inst.n, tuple(cells))


__all__ = [
    "Cell",
    "DEFAULT_ENGINE",
    "EngineConfig",
    "LabeledPartition",
    "N_SCAN",
    "TOL_X",
    "as_weights",
    "weighted_argmax_partition",
]
