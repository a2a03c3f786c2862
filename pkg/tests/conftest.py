from __future__ import annotations

from typing import Callable

import numpy as np
import pytest

from fairbound.measure import Instance, identical_instance, linear_instance, mixed_instance, validate_instance


@pytest.fixture
def mixed() -> Instance:
    return mixed_instance()


@pytest.fixture
def identical() -> Instance:
    return identical_instance()


@pytest.fixture
def linear() -> Instance:
    return linear_instance()


def random_piecewise_linear(rng: np.random.Generator, n: int, pieces: int = 3) -> Instance:
    """Densities interpolating positive random knot values, interior claims."""

    agents = []
    for i in range(n):
        knots = np.concatenate(([0.0], np.sort(rng.uniform(0.05, 0.95, pieces - 1)), [1.0]))
        values = rng.uniform(0.1, 3.0, pieces + 1)
        raw_pieces = []
        for k in range(pieces):
            x0, x1 = knots[k], knots[k + 1]
            slope = (values[k + 1] - values[k]) / (x1 - x0)
            raw_pieces.append({"interval": [x0, x1], "coeffs": [values[k] - slope * x0, slope]})
        agents.append({"name": f"agent{i + 1}", "pieces": raw_pieces})
    claims = 0.5 * rng.dirichlet(np.ones(n)) + 0.5 / n
    return validate_instance({"claims": list(claims / claims.sum()), "agents": agents})


@pytest.fixture
def random_instance() -> Callable[..., Instance]:
    return random_piecewise_linear
