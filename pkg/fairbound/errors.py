"""Exception hierarchy for :mod:`fairbound`.

Library code raises these; only the command line layer turns them into exit
codes.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence


class FairboundError(Exception):
    """Base class for all errors raised by :mod:`fairbound`."""


class DomainError(FairboundError, ValueError):
    """An argument lies outside the domain of an operation."""


@dataclass(frozen=True)
class Violation:
    """A single invariant violation found while validating an instance."""

    agent: Optional[int]
    piece: Optional[int]
    message: str

    def __str__(self) -> str:
        where = []
        if self.agent is not None:
            where.append(f"agent {self.agent}")
        if self.piece is not None:
            where.append(f"piece {self.piece}")
        prefix = ", ".join(where)
        return f"{prefix}: {self.message}" if prefix else self.message


class InstanceValidationError(FairboundError, ValueError):
    """Raised with the full list of violations of an instance description."""

    def __init__(self, violations: Sequence[Violation]):
        self.violations: List[Violation] = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations) or "invalid instance")


class RankDeficientError(FairboundError):
    """Columns not linearly independent."""


class ConeTestFailed(FairboundError):
    """No lower bound from this basis: the claim ray leaves the cone."""


class DegenerateEvvError(FairboundError, ValueError):
    """The value vector is zero."""


class NotNormalizedError(FairboundError, ValueError):
    """Legut's bounds need probability measures and uniform weights."""


class NumericalInconsistencyError(FairboundError):
    """Two computation routes that must agree did not."""


class SwapRollback(NumericalInconsistencyError):
    """A swap accepted by the determinant test failed post-swap verification."""


class OracleError(FairboundError):
    """The linear programming oracle failed to reach an optimum."""


__all__ = [
    "ConeTestFailed",
    "DegenerateEvvError",
    "DomainError",
    "FairboundError",
    "InstanceValidationError",
    "NotNormalizedError",
    "NumericalInconsistencyError",
    "OracleError",
    "RankDeficientError",
    "SwapRollback",
    "Violation",
]