"""Registry of available refinement modes."""
from __future__ import annotations

from typing import Dict, Iterable, Tuple, Type

from .base import BaseRefiner
from .config import RefineConfig
from .random_search import RandomRefiner
from .subgradient import SubgradientRefiner

_ModeInfo = Tuple[Type[BaseRefiner], str]

_MODE_REGISTRY: Dict[str, _ModeInfo] = {
    "random": (RandomRefiner, "uniform Dirichlet samples of the weight vector (seeded)"),
    "subgradient": (SubgradientRefiner, "projected subgradient descent on the upper-bound ratio"),
}


def get_refiner_class(name: str) -> Type[BaseRefiner]:
    """Return the refiner class registered under ``name``."""

    try:
        return _MODE_REGISTRY[name][0]
    except KeyError as exc:
        raise KeyError(f"Unknown refinement mode '{name}'") from exc


def build_refiner(config: RefineConfig) -> BaseRefiner:
    return get_refiner_class(config.mode.value)(config)


def iter_modes() -> Iterable[Tuple[str, Type[BaseRefiner], str]]:
    """Yield ``(name, class, description)`` tuples for registered modes."""

    for name, (cls, description) in _MODE_REGISTRY.items():
        yield name, cls, description


__all__ = ["build_refiner", "get_refiner_class", "iter_modes"]
