"""Machine-readable run reports."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field, fields
from typing import Any, Dict, List, Optional, Sequence

from ..bounds import BoundsResult, SANDWICH_TOL
from ..errors import NumericalInconsistencyError


@dataclass
class SupportingEvv:
    beta: List[float]
    u: List[float]


@dataclass
class RunReport:
    """Outcome of one command.

    Attributes
    ----------
    digest:
        SHA-256 of the canonical instance JSON.
    mode:
        ``bounds``, ``legut``, ``single``, ``random``, ``subgradient`` or ``oracle``.
    supporting:
        Supporting EVVs of the lower bound with their weights.
    uncertified_r:
        Value of the cone system when the basis fails the cone test; never
        a bound, reported so the failing basis can be inspected.
    wall_time:
        Seconds; the only field that differs between repeated runs.
    """

    digest: str
    mode: str
    alpha: List[float]
    upper: Optional[float] = None
    lower: Optional[float] = None
    cone_status: Optional[str] = None
    supporting: List[SupportingEvv] = field(default_factory=list)
    iterations: int = 0
    wall_time: float = 0.0
    oracle_value: Optional[float] = None
    oracle_cells: Optional[int] = None
    gap_met: Optional[bool] = None
    uncertified_r: Optional[float] = None

    def __post_init__(self) -> None:
        self.supporting = [s if isinstance(s, SupportingEvv) else SupportingEvv(**s) for s in self.supporting]
        if self.lower is not None and self.upper is not None and self.lower > self.upper + SANDWICH_TOL:
            raise NumericalInconsistencyError(f"report lower {self.lower} exceeds upper {self.upper}")

    @classmethod
    def from_bounds(
        cls, digest: str, mode: str, alpha: Sequence[float], result: BoundsResult, **extra: Any
    ) -> "RunReport":
        supporting = []
        if result.basis is not None and result.lower is not None:
            supporting = [
                SupportingEvv([float(b) for b in rec.beta], [float(x) for x in rec.u]) for rec in result.basis.evvs
            ]
        return cls(
            digest=digest,
            mode=mode,
            alpha=[float(a) for a in alpha],
            upper=float(result.upper),
            lower=None if result.lower is None else float(result.lower),
            cone_status=result.cone_status.value,
            supporting=supporting,
            uncertified_r=None if result.uncertified_r is None else float(result.uncertified_r),
            **extra,
        )

    def to_dict(self, timing: bool = True) -> Dict[str, Any]:
        data = asdict(self)
        if not timing:
            data.pop("wall_time")
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RunReport":
        known = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in data.items() if k in known})

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        return cls.from_dict(json.loads(text))


__all__ = ["RunReport", "SupportingEvv"]
