"""Per-iteration trace of a refinement run."""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Tuple

import numpy as np
import pandas as pd


@dataclass(frozen=True)
class TraceRecord:
    iteration: int
    beta: Tuple[float, ...]
    u: Tuple[float, ...]
    swap_index: int
    lower: float
    upper: float
    note: str = ""


@dataclass
class RefineTrace:
    """Ordered trace records; iteration ``0`` is the initial support."""

    records: List[TraceRecord] = field(default_factory=list)
    gap_met: Optional[bool] = None

    def append(
        self,
        iteration: int,
        beta: np.ndarray,
        u: np.ndarray,
        swap_index: Optional[int],
        lower: float,
        upper: float,
        note: str = "",
    ) -> None:
        self.records.append(
            TraceRecord(
                iteration,
                tuple(float(b) for b in beta),
                tuple(float(x) for x in u),
                -1 if swap_index is None else int(swap_index),
                float(lower),
                float(upper),
                note,
            )
        )

    def __len__(self) -> int:
        return len(self.records)

    @property
    def iterations(self) -> int:
        return max((r.iteration for r in self.records), default=0)

    @property
    def lowers(self) -> np.ndarray:
        return np.array([r.lower for r in self.records])

    @property
    def uppers(self) -> np.ndarray:
        return np.array([r.upper for r in self.records])

    @property
    def accepted(self) -> int:
        return sum(1 for r in self.records if r.iteration > 0 and r.swap_index >= 0)

    @property
    def acceptance_rate(self) -> float:
        """Fraction of sampled candidates that entered the supporting set."""

        sampled = sum(1 for r in self.records if r.iteration > 0)
        return self.accepted / sampled if sampled else 0.0

    def to_frame(self) -> pd.DataFrame:
        rows = []
        for r in self.records:
            row = {"iteration": r.iteration}
            row.update({f"beta_{i + 1}": b for i, b in enumerate(r.beta)})
            row.update({f"u_{i + 1}": x for i, x in enumerate(r.u)})
            row.update(swap_index=r.swap_index, lower=r.lower, upper=r.upper, note=r.note)
            rows.append(row)
        return pd.DataFrame(rows)

    def write_csv(self, path: Path) -> None:
        self.to_frame().to_csv(path, index=False, float_format="%.17g")

    @classmethod
    def from_frame(cls, frame: pd.DataFrame) -> "RefineTrace":
        beta_cols = sorted((c for c in frame.columns if c.startswith("beta_")), key=lambda c: int(c[5:]))
        u_cols = sorted((c for c in frame.columns if c.startswith("u_")), key=lambda c: int(c[2:]))
        trace = cls()
        for row in frame.itertuples(index=False):
            data = row._asdict()
            note = data.get("note")
            trace.append(
                int(data["iteration"]),
                np.array([data[c] for c in beta_cols]),
                np.array([data[c] for c in u_cols]),
                int(data["swap_index"]),
                data["lower"],
                data["upper"],
                "" if pd.isna(note) else str(note),
            )
        return trace

    @classmethod
    def read_csv(cls, path: Path) -> "RefineTrace":
        return cls.from_frame(pd.read_csv(path, float_precision="round_trip"))


__all__ = ["RefineTrace", "TraceRecord"]
