"""Core measure data structures.

Agents' measures are finite nonatomic measures on the unit interval given by
piecewise polynomial densities with respect to Lebesgue measure.  Polynomial
coefficients are stored in ascending degree order.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Iterable, Iterator, Sequence, Tuple, Union

import numpy as np
from numpy.polynomial import polynomial as P

from ..errors import DomainError, InstanceValidationError, Violation

ArrayLike = Union[float, Sequence[float], np.ndarray]


@dataclass(frozen=True)
class Piece:
    """One polynomial piece ``sum(c_k x**k)`` living on ``[start, end]``."""

    start: float
    end: float
    coeffs: Tuple[float, ...]

    @cached_property
    def _integral(self) -> np.ndarray:
        return P.polyint(np.asarray(self.coeffs, dtype=float))

    def __call__(self, x: ArrayLike) -> np.ndarray:
        return P.polyval(np.asarray(x, dtype=float), np.asarray(self.coeffs, dtype=float))

    def antiderivative(self, x: ArrayLike) -> np.ndarray:
        return P.polyval(np.asarray(x, dtype=float), self._integral)

    @property
    def mass(self) -> float:
        return float(self.antiderivative(self.end) - self.antiderivative(self.start))


@dataclass(frozen=True)
class DensityFunction:
    """Piecewise polynomial density of one agent.

    Attributes
    ----------
    name:
        Agent label.
    pieces:
        Sorted pieces whose intervals tile ``[0, 1]``.
    """

    name: str
    pieces: Tuple[Piece, ...]

    @cached_property
    def _ends(self) -> np.ndarray:
        return np.array([p.end for p in self.pieces], dtype=float)

    @cached_property
    def _offsets(self) -> np.ndarray:
        masses = np.array([p.mass for p in self.pieces], dtype=float)
        return np.concatenate(([0.0], np.cumsum(masses)[:-1]))

    @property
    def breakpoints(self) -> np.ndarray:
        """All piece boundaries including ``0`` and ``1``."""
        return np.concatenate(([self.pieces[0].start], self._ends))

    @property
    def degree(self) -> int:
        return max(len(p.coeffs) for p in self.pieces) - 1

    def piece_index(self, x: ArrayLike) -> np.ndarray:
        """Index of the piece used at ``x``; the left piece wins at shared endpoints."""
        idx = np.searchsorted(self._ends, np.asarray(x, dtype=float), side="left")
        return np.minimum(idx, len(self.pieces) - 1)

    def __call__(self, x: ArrayLike) -> np.ndarray:
        shape = np.shape(x)
        xs = np.atleast_1d(np.asarray(x, dtype=float)).ravel()
        idx = self.piece_index(xs)
        out = np.empty_like(xs)
        for k, piece in enumerate(self.pieces):
            mask = idx == k
            if np.any(mask):
                out[mask] = piece(xs[mask])
        return out.reshape(shape)

    def cdf(self, x: ArrayLike) -> np.ndarray:
        """Exact ``integral_0^x f`` by closed form antiderivatives."""
        shape = np.shape(x)
        xs = np.atleast_1d(np.asarray(x, dtype=float)).ravel()
        idx = self.piece_index(xs)
        out = np.empty_like(xs)
        for k, piece in enumerate(self.pieces):
            mask = idx == k
            if np.any(mask):
                out[mask] = self._offsets[k] + piece.antiderivative(xs[mask]) - piece.antiderivative(piece.start)
        return out.reshape(shape)

    @cached_property
    def total_mass(self) -> float:
        return float(self._offsets[-1] + self.pieces[-1].mass)

    def scaled(self, factor: float) -> "DensityFunction":
        pieces = tuple(replace(p, coeffs=tuple(c * factor for c in p.coeffs)) for p in self.pieces)
        return DensityFunction(self.name, pieces)


@dataclass(frozen=True)
class IntervalSet:
    """Ordered union of disjoint closed intervals inside ``[0, 1]``.

    Intervals may touch at endpoints; shared endpoints carry no mass.
    """

    intervals: Tuple[Tuple[float, float], ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        prev_end = 0.0
        for a, b in self.intervals:
            if not (0.0 <= a <= b <= 1.0):
                raise DomainError(f"interval [{a}, {b}] is not contained in [0, 1]")
            if a < prev_end:
                raise DomainError(f"interval [{a}, {b}] overlaps or is out of order")
            prev_end = b

    @classmethod
    def of(cls, *pairs: Tuple[float, float]) -> "IntervalSet":
        return cls(tuple((float(a), float(b)) for a, b in pairs))

    @classmethod
    def full(cls) -> "IntervalSet":
        return cls(((0.0, 1.0),))

    @classmethod
    def merged(cls, pairs: Iterable[Tuple[float, float]]) -> "IntervalSet":
        """Build a set from sorted pairs, joining intervals that touch."""
        out: list[Tuple[float, float]] = []
        for a, b in pairs:
            if out and a <= out[-1][1]:
                out[-1] = (out[-1][0], max(out[-1][1], b))
            else:
                out.append((float(a), float(b)))
        return cls(tuple(out))

    def __iter__(self) -> Iterator[Tuple[float, float]]:
        return iter(self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)

    @property
    def length(self) -> float:
        return float(sum(b - a for a, b in self.intervals))

    def contains(self, x: float) -> bool:
        return any(a <= x <= b for a, b in self.intervals)


@dataclass(frozen=True)
class Instance:
    """Agents' densities together with the claim vector."""

    densities: Tuple[DensityFunction, ...]
    claims: Tuple[float, ...]

    @property
    def n(self) -> int:
        return len(self.densities)

    @property
    def alpha(self) -> np.ndarray:
        return np.asarray(self.claims, dtype=float)

    @property
    def masses(self) -> np.ndarray:
        return np.array([f.total_mass for f in self.densities], dtype=float)

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(f.name for f in self.densities)

    @property
    def breakpoints(self) -> np.ndarray:
        """Union of every agent's piece boundaries."""
        return np.unique(np.concatenate([f.breakpoints for f in self.densities]))

    def is_normalized(self, tol: float = 1e-9) -> bool:
        return bool(np.all(np.abs(self.masses - 1.0) <= tol))

    def with_claims(self, claims: Sequence[float]) -> "Instance":
        from .loaders import check_claims

        violations = check_claims(claims, self.n)
        if violations:
            raise InstanceValidationError(violations)
        return replace(self, claims=tuple(float(c) for c in claims))


def eval_density(f: DensityFunction, x: float) -> float:
    """Value of ``f`` at ``x``; the left piece is used at shared endpoints."""

    if not (0.0 <= x <= 1.0):
        raise DomainError(f"x={x} lies outside [0, 1]")
    return float(f(np.array([x]))[0])


def measure_of(f: DensityFunction, s: IntervalSet) -> float:
    """Exact integral of ``f`` over the interval set ``s``."""

    if not len(s):
        return 0.0
    bounds = np.asarray(s.intervals, dtype=float)
    return float(np.sum(f.cdf(bounds[:, 1]) - f.cdf(bounds[:, 0])))


def total_mass(f: DensityFunction) -> float:
    """Return ``mu_i(C)``; a nonpositive mass makes the instance invalid."""

    mass = f.total_mass
    if not mass > 0.0:
        raise InstanceValidationError([Violation(None, None, f"density '{f.name}' has nonpositive total mass {mass}")])
    return mass


__all__ = [
    "DensityFunction",
    "Instance",
    "IntervalSet",
    "Piece",
    "eval_density",
    "measure_of",
    "total_mass",
]
