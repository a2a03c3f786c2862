"""Persistence helpers for instances."""
from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Any, Dict

from .models import Instance


def instance_to_dict(inst: Instance) -> Dict[str, Any]:
    """Return the JSON schema representation of ``inst``."""

    return {
        "claims": [float(c) for c in inst.claims],
        "agents": [
            {
                "name": f.name,
                "pieces": [
                    {"interval": [p.start, p.end], "coeffs": [float(c) for c in p.coeffs]} for p in f.pieces
                ],
            }
            for f in inst.densities
        ],
    }


def write_instance(inst: Instance, path: Path) -> None:
    """Write ``inst`` to ``path`` as JSON."""

    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8") as fh:
        json.dump(instance_to_dict(inst), fh, indent=2)
        fh.write("\n")


def instance_digest(inst: Instance) -> str:
    """SHA-256 of the canonical JSON serialization of ``inst``."""

    canonical = json.dumps(instance_to_dict(inst), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


__all__ = ["instance_digest", "instance_to_dict", "write_instance"]
