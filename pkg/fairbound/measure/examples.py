"""Built-in example instances."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Callable, Dict

from .loaders import validate_instance
from .models import Instance

# Beta(2, 5) density 30 x (1 - x)^4 expanded in ascending powers
BETA_2_5 = [0.0, 30.0, -120.0, 180.0, -120.0, 30.0]


def mixed_instance_dict() -> Dict[str, Any]:
    """Three agents with densities ``1``, ``2x`` and Beta(2, 5), equal claims."""

    return {
        "claims": [1 / 3, 1 / 3, 1 / 3],
        "agents": [
            {"name": "uniform", "pieces": [{"interval": [0.0, 1.0], "coeffs": [1.0]}]},
            {"name": "linear", "pieces": [{"interval": [0.0, 1.0], "coeffs": [0.0, 2.0]}]},
            {"name": "beta25", "pieces": [{"interval": [0.0, 1.0], "coeffs": list(BETA_2_5)}]},
        ],
    }


def identical_instance_dict(n: int = 3) -> Dict[str, Any]:
    """``n`` agents sharing the uniform density, equal claims."""

    return {
        "claims": [1 / n] * n,
        "agents": [
            {"name": f"agent{i + 1}", "pieces": [{"interval": [0.0, 1.0], "coeffs": [1.0]}]} for i in range(n)
        ],
    }


def linear_instance_dict() -> Dict[str, Any]:
    """Two agents with densities ``1`` and ``2x``, equal claims."""

    return {
        "claims": [0.5, 0.5],
        "agents": [
            {"name": "uniform", "pieces": [{"interval": [0.0, 1.0], "coeffs": [1.0]}]},
            {"name": "linear", "pieces": [{"interval": [0.0, 1.0], "coeffs": [0.0, 2.0]}]},
        ],
    }


EXAMPLES: Dict[str, Callable[[], Dict[str, Any]]] = {
    "mixed": mixed_instance_dict,
    "identical": identical_instance_dict,
    "linear": linear_instance_dict,
}


def mixed_instance() -> Instance:
    return validate_instance(mixed_instance_dict())


def identical_instance(n: int = 3) -> Instance:
    return validate_instance(identical_instance_dict(n))


def linear_instance() -> Instance:
    return validate_instance(linear_instance_dict())


def build_example_instance(path: Path, kind: str = "mixed") -> None:
    """Write the example instance ``kind`` to ``path``."""

    try:
        raw = EXAMPLES[kind]()
    except KeyError as exc:
        raise ValueError(f"Unknown example '{kind}'") from exc
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(raw, indent=2) + "\n", encoding="utf-8")


__all__ = [
    "BETA_2_5",
    "EXAMPLES",
    "build_example_instance",
    "identical_instance",
    "identical_instance_dict",
    "linear_instance",
    "linear_instance_dict",
    "mixed_instance",
    "mixed_instance_dict",
]
